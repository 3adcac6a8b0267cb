"""Off-diagonal localization |<A k_z, k_(-z)>| along the diagonal."""

import numpy as np
from scipy.special import gammaln

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import TruncationError
from quantum_harmonic.fock_core.basis import coherent_state
from quantum_harmonic.models import OperatorMatrix
from quantum_harmonic.parity.continuity import direction_points


def localization_profile(
    A: OperatorMatrix,
    radii,
    directions: int = None,
    strict: bool = True,
    tol: float = None,
) -> np.ndarray:
    """
    max over sampled directions of |<A k_z, k_(-z)>| per radius.

    Equals |Berezin(UA)(z)|. Radii whose coherent tail exceeds ``tol``
    raise ``TruncationError`` unless ``strict`` is off.
    """
    radii = np.asarray(radii, dtype=float)
    directions = directions or qha_setting("DIRECTIONS")
    tol = qha_setting("TAIL_TOLERANCE") if tol is None else tol
    profile = np.empty(radii.size)
    for i, r in enumerate(radii):
        best = 0.0
        for z in direction_points(r, directions, A.spec):
            k_z = coherent_state(z, A.spec, warn=False)
            if strict and k_z.tail > tol:
                raise TruncationError(
                    f"coherent tail {k_z.tail:.2e} at r={r:.3g} exceeds "
                    f"{tol:.1e}",
                    "radii",
                )
            k_minus = coherent_state(-z, A.spec, warn=False)
            value = abs(np.vdot(k_minus.coeffs, A.entries @ k_z.coeffs))
            best = max(best, value)
        profile[i] = best
    return profile


def rank_one_localization(a: int, b: int, radii) -> np.ndarray:
    """Closed form for A = e_a (x) e_b on a single mode.

    |<k_z, e_b>| |<e_a, k_(-z)>| = e^(-r^2/2) (r / sqrt 2)^(a+b)
    / sqrt(a! b!).
    """
    r = np.asarray(radii, dtype=float)
    with np.errstate(divide="ignore"):
        log_r = np.where(r > 0, np.log(r / np.sqrt(2.0)), -np.inf)
    log_value = (
        -(r**2) / 2.0
        + (a + b) * log_r
        - 0.5 * (gammaln(a + 1.0) + gammaln(b + 1.0))
    )
    if a + b == 0:
        log_value = -(r**2) / 2.0
    return np.exp(log_value)


def identity_localization(radii) -> np.ndarray:
    """|<k_z, k_(-z)>| = e^(-r^2)."""
    return np.exp(-np.asarray(radii, dtype=float) ** 2)
