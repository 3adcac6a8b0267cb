from dataclasses import dataclass, field
from typing import Callable, Optional

from quantum_harmonic.models.helper.enums import Index_Method_Choices


@dataclass(frozen=True)
class BandProfile:
    """
    Band structure of an operator matrix.

    Attributes:
        lower (int): Subdiagonals kept (entries with row > col raise the
            basis degree).
        upper (int): Superdiagonals kept.
        residual (float): Frobenius norm of everything outside the band.
    """

    lower: int
    upper: int
    residual: float

    @property
    def width(self) -> int:
        return max(self.lower, self.upper)


@dataclass(frozen=True)
class IndexEstimate:
    """
    Integer Fredholm index estimate with the data that supports it.

    Attributes:
        value (int): Estimated index.
        method (Index_Method_Choices): Deficiency or winding.
        kernel_dim (int | None): Numerical kernel dimension (deficiency).
        cokernel_dim (int | None): Numerical cokernel dimension.
        gap (float | None): Singular-value gap ratio at the tolerance, or
            the winding residual for the winding method.
        dims (tuple): Truncation dims the estimate used.
    """

    value: int
    method: Index_Method_Choices
    kernel_dim: Optional[int] = None
    cokernel_dim: Optional[int] = None
    gap: Optional[float] = None
    dims: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": str(self.method),
            "kernel_dim": self.kernel_dim,
            "cokernel_dim": self.cokernel_dim,
            "gap": self.gap,
            "dims": list(self.dims),
        }


@dataclass(frozen=True)
class FamilyMember:
    """
    Named operator of an experiment family, built per truncation.

    Attributes:
        name (str): Label used in reports.
        build (Callable[[FockSpec], OperatorMatrix]): Constructor.
        toeplitz (bool): Member is a Toeplitz operator (so it lies in C_1
            and its Berezin curve is a smoothed symbol).
    """

    name: str
    build: Callable
    toeplitz: bool = False
