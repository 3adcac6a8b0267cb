import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
from scipy import linalg

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import DimensionOverflowError, InvalidSpecError
from quantum_harmonic.models.helper.npz import npz_path


@dataclass(frozen=True)
class FockSpec:
    """
    Truncated Fock space descriptor.

    Attributes:
        dim (int): Truncation size D, the number of retained basis vectors.
        n (int): Complex dimension of phase space (1, or the number of
            tensor factors).
        tensor_factors (tuple[int, ...] | None): Per-factor dims for the
            n >= 2 tensor construction; ``dim`` is their product.

    Basis vectors of a tensor spec are ordered by total degree first and
    lexicographically over the factor degrees within a degree, so every
    degree block is contiguous. Arrays assembled with ``numpy.kron`` are
    moved to this order by ``from_kron``.
    """

    dim: int
    n: int = 1
    tensor_factors: Optional[tuple] = None

    def __post_init__(self):
        if self.tensor_factors is not None:
            factors = tuple(int(d) for d in self.tensor_factors)
            object.__setattr__(self, "tensor_factors", factors)
            if len(factors) != self.n:
                raise InvalidSpecError(
                    f"n={self.n} but {len(factors)} tensor factors given",
                    "n",
                )
            if any(d < 2 for d in factors):
                raise InvalidSpecError(
                    "every tensor factor needs dim >= 2", "tensor_factors"
                )
            if int(np.prod(factors)) != self.dim:
                raise InvalidSpecError(
                    "dim must equal the product of the factor dims", "dim"
                )
            cap = qha_setting("MAX_PRODUCT_DIM")
            if self.dim > cap:
                raise DimensionOverflowError(
                    f"product dimension {self.dim} exceeds cap {cap}", "dim"
                )
        elif self.n != 1:
            raise InvalidSpecError(
                "n >= 2 requires the tensor construction", "tensor_factors"
            )
        if self.dim < 2:
            raise InvalidSpecError("truncation size must be >= 2", "dim")

    @classmethod
    def product(cls, *factor_dims) -> "FockSpec":
        """Tensor-product spec from per-factor dims (or one sequence)."""
        if len(factor_dims) == 1 and np.ndim(factor_dims[0]) == 1:
            factor_dims = tuple(factor_dims[0])
        return cls(
            dim=int(np.prod(factor_dims)),
            n=len(factor_dims),
            tensor_factors=tuple(factor_dims),
        )

    @property
    def is_tensor(self) -> bool:
        return self.tensor_factors is not None

    @property
    def factors(self) -> tuple:
        """Single-mode specs of every factor (``(self,)`` when n = 1)."""
        if not self.is_tensor:
            return (self,)
        return tuple(FockSpec(dim=d) for d in self.tensor_factors)

    @cached_property
    def _kron_degrees(self) -> np.ndarray:
        if not self.is_tensor:
            return np.arange(self.dim).reshape(-1, 1)
        grids = np.meshgrid(
            *[np.arange(d) for d in self.tensor_factors], indexing="ij"
        )
        return np.stack([g.ravel() for g in grids], axis=1)

    @cached_property
    def kron_order(self) -> np.ndarray:
        """Position in ``numpy.kron`` order of every basis index."""
        kron = self._kron_degrees
        if not self.is_tensor:
            return np.arange(self.dim)
        # lexsort sorts by the last key first.
        keys = tuple(kron[:, j] for j in reversed(range(self.n)))
        return np.lexsort(keys + (kron.sum(axis=1),))

    def from_kron(self, array: np.ndarray) -> np.ndarray:
        """Reorder a vector or square matrix built in ``numpy.kron`` order."""
        array = np.asarray(array)
        if not self.is_tensor:
            return array
        order = self.kron_order
        if array.ndim == 1:
            return array[order]
        return array[np.ix_(order, order)]

    @cached_property
    def factor_degrees(self) -> np.ndarray:
        """``(dim, n)`` array of per-factor degrees of every basis index."""
        return self._kron_degrees[self.kron_order]

    @cached_property
    def degrees(self) -> np.ndarray:
        """Total degree of every basis index."""
        return self.factor_degrees.sum(axis=1)

    def degree(self, m: int) -> int:
        return int(self.degrees[m])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "tensor_factors": list(self.tensor_factors or []) or None,
        }


@dataclass(frozen=True)
class PhasePoint:
    """
    Point of phase space, identified with C^n.

    Attributes:
        components (tuple[complex, ...]): One complex coordinate per mode.
    """

    components: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(complex(c) for c in self.components)
        )

    @classmethod
    def of(cls, value: Union["PhasePoint", complex, Sequence]) -> "PhasePoint":
        if isinstance(value, PhasePoint):
            return value
        if np.ndim(value) == 0:
            return cls((complex(value),))
        return cls(tuple(value))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.components, dtype=complex)

    def norm(self) -> float:
        return float(np.linalg.norm(self.array))

    def sigma(self, other: "PhasePoint") -> float:
        """Symplectic form Im(z . conj(w))."""
        other = PhasePoint.of(other)
        return float(np.imag(np.sum(self.array * np.conj(other.array))))

    def __neg__(self):
        return PhasePoint(tuple(-self.array))

    def __add__(self, other):
        return PhasePoint(tuple(self.array + PhasePoint.of(other).array))

    def __sub__(self, other):
        return PhasePoint(tuple(self.array - PhasePoint.of(other).array))

    def scaled(self, factor: complex) -> "PhasePoint":
        return PhasePoint(tuple(factor * self.array))


@dataclass(frozen=True, eq=False)
class FockVector:
    """
    Vector of the truncated Fock space.

    Attributes:
        coeffs (np.ndarray): Coefficients in the orthonormal monomial basis.
        spec (FockSpec): Truncation the vector lives in.
        tail (float): Mass of the exact vector lost to truncation (0 for
            vectors built directly in the truncated space).
    """

    coeffs: np.ndarray
    spec: FockSpec
    tail: float = 0.0

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (self.spec.dim,):
            raise InvalidSpecError(
                f"expected {self.spec.dim} coefficients, got {coeffs.shape}",
                "coeffs",
            )
        object.__setattr__(self, "coeffs", coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def inner(self, other: "FockVector") -> complex:
        """Inner product <self, other>, linear in the first slot."""
        return complex(np.vdot(other.coeffs, self.coeffs))


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Dense operator on a truncated Fock space.

    Attributes:
        entries (np.ndarray): ``dim x dim`` complex matrix.
        spec (FockSpec): Truncation the operator acts on.
        convention (str): Free-form tag recorded in matrix dumps.
    """

    entries: np.ndarray
    spec: FockSpec
    convention: str = field(default="")

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (self.spec.dim, self.spec.dim):
            raise InvalidSpecError(
                f"expected a {self.spec.dim}x{self.spec.dim} matrix, "
                f"got {entries.shape}",
                "entries",
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, spec: FockSpec) -> "OperatorMatrix":
        return cls(np.eye(spec.dim), spec)

    @classmethod
    def rank_one(cls, spec: FockSpec, a: int, b: int) -> "OperatorMatrix":
        """Matrix unit ``e_a (x) e_b``, mapping e_b to e_a."""
        entries = np.zeros((spec.dim, spec.dim), dtype=complex)
        entries[a, b] = 1.0
        return cls(entries, spec)

    def _wrap(self, entries) -> "OperatorMatrix":
        return OperatorMatrix(entries, self.spec, self.convention)

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return self._wrap(self.entries @ other.entries)
        if isinstance(other, FockVector):
            return FockVector(self.entries @ other.coeffs, self.spec)
        return NotImplemented

    def __add__(self, other):
        return self._wrap(self.entries + other.entries)

    def __sub__(self, other):
        return self._wrap(self.entries - other.entries)

    def __mul__(self, scalar):
        return self._wrap(scalar * self.entries)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.entries)

    def adjoint(self) -> "OperatorMatrix":
        return self._wrap(self.entries.conj().T)

    def singular_values(self) -> np.ndarray:
        return linalg.svdvals(self.entries)

    def op_norm(self) -> float:
        return float(self.singular_values()[0])

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def rank(self, tol: float = 1e-10) -> int:
        s = self.singular_values()
        if s[0] == 0:
            return 0
        return int(np.sum(s > tol * s[0]))

    def block(self, size: int) -> np.ndarray:
        """Top-left ``size x size`` submatrix."""
        return self.entries[:size, :size]

    def dump(self, path) -> Path:
        """Write entries and a header (dims, spec, convention) as ``.npz``."""
        path = npz_path(path)
        header = {
            "dims": list(self.entries.shape),
            "spec": self.spec.to_dict(),
            "convention": self.convention,
            "order": "row-major",
        }
        np.savez(path, header=json.dumps(header), entries=self.entries)
        return path

    @classmethod
    def load(cls, path) -> "OperatorMatrix":
        with np.load(npz_path(path), allow_pickle=False) as data:
            header = json.loads(str(data["header"]))
            entries = np.array(data["entries"])
        spec_data = header["spec"]
        spec = FockSpec(
            dim=spec_data["dim"],
            n=spec_data["n"],
            tensor_factors=(
                tuple(spec_data["tensor_factors"])
                if spec_data["tensor_factors"]
                else None
            ),
        )
        return cls(entries, spec, header.get("convention", ""))
