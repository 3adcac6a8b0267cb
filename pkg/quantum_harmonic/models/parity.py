from dataclasses import dataclass, field

import numpy as np

from quantum_harmonic.models.fock import OperatorMatrix
from quantum_harmonic.models.helper.enums import Continuity_Mode_Choices


@dataclass(frozen=True, eq=False)
class EvenOddSplit:
    """
    Decomposition A = A_even + A_odd with respect to the parity operator.

    Attributes:
        even_part (OperatorMatrix): (A + UAU) / 2.
        odd_part (OperatorMatrix): (A - UAU) / 2.
        residual (float): ||even_part + odd_part - A||_F.
    """

    even_part: OperatorMatrix
    odd_part: OperatorMatrix
    residual: float


@dataclass(frozen=True, eq=False)
class ContinuityProfile:
    """
    Sampled continuity modulus of an operator.

    Attributes:
        radii (np.ndarray): Sampled radii.
        moduli (np.ndarray): Sup over sampled directions of the defect.
        mode (Continuity_Mode_Choices): Which defect was measured.
        truncation_errors (np.ndarray): Known W_z truncation error per
            radius.
        warnings (list[str]): Truncation-dominance notes.
    """

    radii: np.ndarray
    moduli: np.ndarray
    mode: Continuity_Mode_Choices
    truncation_errors: np.ndarray = None
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        data = {
            "mode": str(self.mode),
            "radii": self.radii.tolist(),
            "moduli": self.moduli.tolist(),
            "warnings": list(self.warnings),
        }
        if self.truncation_errors is not None:
            data["truncation_errors"] = self.truncation_errors.tolist()
        return data


@dataclass(frozen=True)
class SubspaceSplit:
    """
    Factor-coordinate split of the fixed-eigenspace complement V_0.

    Attributes:
        v0_factors (tuple[int, ...]): Factors on which some Theta_j acts
            nontrivially (they span V_0).
        complement_factors (tuple[int, ...]): Factors fixed by every
            Theta_j (they span the orthogonal complement).
    """

    v0_factors: tuple
    complement_factors: tuple

    def to_dict(self) -> dict:
        return {
            "v0_factors": list(self.v0_factors),
            "complement_factors": list(self.complement_factors),
        }
