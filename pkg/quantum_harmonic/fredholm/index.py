"""
Fredholm index estimators.

The deficiency estimator works on tall band truncations: kernel of
A[: M + lower, : M] minus kernel of A*[: M + upper, : M]. For a banded
operator the first M columns of A land in the first M + lower rows, so
the tall truncation sees the whole image of span{e_0..e_(M-1)}; the
same holds for A* with the upper bandwidth.
"""

import numpy as np
from scipy import linalg

from quantum_harmonic.errors import (
    CurveThroughZeroError,
    IllConditionedError,
    InvalidSpecError,
)
from quantum_harmonic.fock_core.linalg import numerical_rank
from quantum_harmonic.fredholm.band import BAND_TOL, band_profile_of
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import IndexEstimate, OperatorMatrix
from quantum_harmonic.models.helper.enums import Index_Method_Choices
from quantum_harmonic.parity.even_odd import block_decompose
from quantum_harmonic.quantize.berezin import berezin_grid

logger = get_logger(__name__)

INDEX_TOL = 1e-8
GAP_FACTOR = 10.0
MIN_INTERIOR_RATIO = 8


def _relative_singular_values(matrix: np.ndarray) -> np.ndarray:
    s = linalg.svdvals(matrix)
    if s.size == 0 or s[0] == 0:
        return np.zeros_like(s)
    return s / s[0]


def _check_gap(s: np.ndarray, tol: float, label: str) -> float:
    """Raise when a relative singular value sits inside the gap window.

    Returns the gap ratio (smallest value above tol over largest value at
    or below tol; ``inf`` when one side is empty).
    """
    near = (s > tol / GAP_FACTOR) & (s <= tol * GAP_FACTOR)
    if near.any():
        raise IllConditionedError(
            f"{label}: singular values {s[near]} lie within a factor "
            f"{GAP_FACTOR:g} of tol={tol:.1e}",
            "tol",
        )
    above, below = s[s > tol], s[s <= tol]
    if above.size == 0 or below.size == 0 or below.max() == 0:
        return float("inf")
    return float(above.min() / below.max())


def deficiency_of(
    entries: np.ndarray,
    tol: float = INDEX_TOL,
    interior: float = 0.5,
    band_tol: float = BAND_TOL,
) -> IndexEstimate:
    """Deficiency index of a square banded array."""
    entries = np.asarray(entries)
    size = entries.shape[0]
    profile = band_profile_of(entries, band_tol)
    M = int(interior * size)
    if M < MIN_INTERIOR_RATIO * profile.width:
        raise InvalidSpecError(
            f"interior block {M} is below {MIN_INTERIOR_RATIO} x bandwidth "
            f"{profile.width}; raise D or the interior fraction",
            "interior",
        )
    if M + max(profile.lower, profile.upper) > size:
        raise InvalidSpecError(
            "interior block plus bandwidth exceeds the truncation",
            "interior",
        )

    tall = entries[: M + profile.lower, :M]
    tall_adjoint = np.conj(entries[:M, : M + profile.upper]).T
    s_tall = _relative_singular_values(tall)
    s_adjoint = _relative_singular_values(tall_adjoint)
    gap = min(
        _check_gap(s_tall, tol, "A"), _check_gap(s_adjoint, tol, "A*")
    )
    kernel = M - numerical_rank(linalg.svdvals(tall), tol)
    cokernel = M - numerical_rank(linalg.svdvals(tall_adjoint), tol)
    return IndexEstimate(
        value=kernel - cokernel,
        method=Index_Method_Choices.DEFICIENCY,
        kernel_dim=kernel,
        cokernel_dim=cokernel,
        gap=gap,
        dims=(M, M + profile.lower, M + profile.upper),
    )


def index_deficiency(
    A: OperatorMatrix, tol: float = INDEX_TOL, interior: float = 0.5
) -> IndexEstimate:
    """
    dim ker - dim coker on the tall band truncation of size
    M = interior * D.

    Raises ``IllConditionedError`` when a relative singular value lies
    within a factor 10 of ``tol``, ``NotBandedError`` for operators
    without a band below D/2.
    """
    return deficiency_of(A.entries, tol, interior)


def block_index(
    A: OperatorMatrix, tol: float = INDEX_TOL, interior: float = 0.5
):
    """Deficiency indices of the A11 (even) and A22 (odd) blocks."""
    a11, _, _, a22 = block_decompose(A)
    return deficiency_of(a11, tol, interior), deficiency_of(
        a22, tol, interior
    )


def winding_number(values: np.ndarray):
    """Winding of a closed sampled curve about 0, with its residual."""
    closed = np.append(values, values[0])
    increments = np.angle(closed[1:] / closed[:-1])
    turns = increments.sum() / (2 * np.pi)
    winding = int(np.rint(turns))
    return winding, float(abs(turns - winding))


def index_winding(
    A: OperatorMatrix, radius: float = 6.0, samples: int = 720
) -> IndexEstimate:
    """
    Minus the winding number of the Berezin curve on |z| = ``radius``.

    The curve must stay clear of 0: its minimum modulus has to exceed ten
    times both the largest chord between samples and the winding residual,
    otherwise ``CurveThroughZeroError``.
    """
    if A.spec.is_tensor:
        raise InvalidSpecError("winding needs a single-mode spec", "spec")
    angles = 2 * np.pi * np.arange(samples) / samples
    values = berezin_grid(A, [radius], angles)[0]
    chord = float(np.max(np.abs(np.diff(np.append(values, values[0])))))
    floor = float(np.min(np.abs(values)))
    winding, residual = winding_number(values) if floor > 0 else (0, np.inf)
    if floor <= 10.0 * max(chord, residual):
        raise CurveThroughZeroError(
            f"Berezin curve at R={radius:g} comes within {floor:.2e} of 0 "
            f"(chord {chord:.2e}, residual {residual:.2e})",
            "radius",
        )
    logger.debug(
        "winding %d at R=%g, min modulus %.3f", winding, radius, floor
    )
    return IndexEstimate(
        value=-winding,
        method=Index_Method_Choices.WINDING,
        gap=residual,
        dims=(A.spec.dim, samples),
    )
