"""Band structure of operator matrices in basis-degree offsets."""

import numpy as np

from quantum_harmonic.errors import NotBandedError
from quantum_harmonic.models import BandProfile

BAND_TOL = 1e-10


def diagonal_masses(entries: np.ndarray) -> np.ndarray:
    """Squared Frobenius mass per offset ``row - col``.

    Index ``d + (cols - 1)`` holds offset ``d``, from ``-(cols - 1)`` to
    ``rows - 1``.
    """
    rows, cols = entries.shape
    r, c = np.indices(entries.shape)
    offsets = (r - c).ravel() + (cols - 1)
    return np.bincount(
        offsets,
        weights=np.abs(entries.ravel()) ** 2,
        minlength=rows + cols - 1,
    )


def band_profile_of(entries: np.ndarray, tol: float = BAND_TOL):
    """``band_profile`` for a plain (possibly rectangular) array."""
    entries = np.asarray(entries)
    rows, cols = entries.shape
    masses = diagonal_masses(entries)
    total = masses.sum()
    bound = (tol**2) * total
    cumulative = np.concatenate([[0.0], np.cumsum(masses)])

    limit = max(rows, cols) / 2
    best = None
    for upper in range(min(cols, int(np.ceil(limit)))):
        start = (cols - 1) - upper
        for lower in range(min(rows, int(np.ceil(limit)))):
            stop = (cols - 1) + lower + 1
            kept = cumulative[stop] - cumulative[start]
            residual2 = max(total - kept, 0.0)
            if residual2 <= bound:
                key = (lower + upper, max(lower, upper), lower)
                if best is None or key < best[0]:
                    best = (key, lower, upper, residual2)
                break
    if best is None:
        raise NotBandedError(
            f"no bandwidth below {limit:g} keeps the off-band residual "
            f"under {tol:.1e} of the Frobenius norm",
            "A",
        )
    _, lower, upper, residual2 = best
    return BandProfile(lower, upper, float(np.sqrt(residual2)))


def band_profile(A, tol: float = BAND_TOL) -> BandProfile:
    """
    Minimal (lower, upper) bandwidths with off-band residual at most
    ``tol * ||A||_F``.

    ``lower`` counts subdiagonals (entries raising the basis degree),
    ``upper`` superdiagonals. Among admissible pairs the smallest total
    width wins. Raises ``NotBandedError`` when no pair below D/2 works.
    """
    return band_profile_of(A.entries, tol)
