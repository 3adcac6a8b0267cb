"""Berezin transform A~(z) = <A k_z, k_z>."""

import numpy as np

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import TruncationError
from quantum_harmonic.fock_core.basis import coherent_state
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import OperatorMatrix, PhasePoint

logger = get_logger(__name__)


def berezin_with_tail(A: OperatorMatrix, z, strict: bool = True, tol=None):
    """Berezin value at ``z`` and the coherent-state tail it was built on.

    ``strict`` turns a tail above ``tol`` (default
    ``QHA["TAIL_TOLERANCE"]``) into ``TruncationError``.
    """
    tol = qha_setting("TAIL_TOLERANCE") if tol is None else tol
    state = coherent_state(z, A.spec, warn=False)
    if state.tail > tol:
        if strict:
            raise TruncationError(
                f"coherent tail {state.tail:.2e} at |z|="
                f"{PhasePoint.of(z).norm():.3g} exceeds {tol:.1e} "
                f"(D={A.spec.dim})",
                "z",
            )
        logger.debug("berezin sample with tail %.2e", state.tail)
    k = state.coeffs
    return complex(np.vdot(k, A.entries @ k)), state.tail


def berezin(A: OperatorMatrix, z, strict: bool = True, tol=None) -> complex:
    """Berezin transform <A k_z, k_z>; |value| <= ||A||."""
    value, _ = berezin_with_tail(A, z, strict, tol)
    return value


def berezin_grid(
    A: OperatorMatrix, radii, angles, strict: bool = True, tol=None
) -> np.ndarray:
    """
    Berezin samples on a polar grid.

    ``result[i, j]`` is the value at ``radii[i] * exp(1j * angles[j])``.

    Single-mode operators only; the ordering is radius-major and does not
    depend on evaluation order.
    """
    radii = np.asarray(radii, dtype=float)
    angles = np.asarray(angles, dtype=float)
    values = np.empty((radii.size, angles.size), dtype=complex)
    for i, r in enumerate(radii):
        for j, a in enumerate(angles):
            values[i, j] = berezin(A, r * np.exp(1j * a), strict, tol)
    return values
