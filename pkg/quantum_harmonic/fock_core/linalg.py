from dataclasses import dataclass

import numpy as np
from scipy import linalg

from quantum_harmonic.models import OperatorMatrix


@dataclass(frozen=True, eq=False)
class LinalgSummary:
    """
    Dense linear-algebra facts about one operator matrix.

    Attributes:
        adjoint (OperatorMatrix): Conjugate transpose.
        operator_norm (float): Largest singular value.
        singular_values (np.ndarray): Descending singular values.
        numerical_rank (int): Count of singular values above tol * s_max.
        frobenius_norm (float)
        trace (complex)
        tol (float): Relative rank tolerance used.
    """

    adjoint: OperatorMatrix
    operator_norm: float
    singular_values: np.ndarray
    numerical_rank: int
    frobenius_norm: float
    trace: complex
    tol: float


def numerical_rank(singular_values: np.ndarray, tol: float) -> int:
    if singular_values.size == 0 or singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > tol * singular_values[0]))


def linalg_utilities(A: OperatorMatrix, tol: float = 1e-10) -> LinalgSummary:
    s = linalg.svdvals(A.entries)
    return LinalgSummary(
        adjoint=A.adjoint(),
        operator_norm=float(s[0]),
        singular_values=s,
        numerical_rank=numerical_rank(s, tol),
        frobenius_norm=A.frobenius_norm(),
        trace=A.trace(),
        tol=tol,
    )
