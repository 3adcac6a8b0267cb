"""Monomial basis, reproducing kernels and coherent states."""

import numpy as np
from scipy.special import gammainc, gammaln

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import FockSpec, FockVector, PhasePoint

logger = get_logger(__name__)


def log_monomial_norm(m):
    """log ||z^m|| = (m log 2 + log m!) / 2 under the Gaussian measure."""
    m = np.asarray(m, dtype=float)
    return 0.5 * (m * np.log(2.0) + gammaln(m + 1.0))


def monomial_norm(m):
    """
    Norm of z^m in L^2((2 pi)^-1 e^(-|z|^2/2) dz), i.e. sqrt(2^m m!).

    Computed through the log domain; large degrees overflow to ``inf``
    only when the value itself is beyond double range.
    """
    if np.any(np.asarray(m) < 0):
        raise InvalidSpecError("monomial degree must be >= 0", "m")
    value = np.exp(log_monomial_norm(m))
    return float(value) if np.ndim(value) == 0 else value


def coherent_tail(z, spec: FockSpec) -> float:
    """Norm-squared mass of k_z beyond the truncation.

    Per factor this is the Poisson tail P(N >= D) with mean |z_j|^2 / 2.
    """
    point = PhasePoint.of(z)
    check_point(point, spec)
    kept = 1.0
    for component, factor in zip(point.components, spec.factors):
        kept *= 1.0 - gammainc(factor.dim, abs(component) ** 2 / 2.0)
    return float(1.0 - kept)


def coherent_coefficients(z: complex, dim: int) -> np.ndarray:
    """Coefficients e^(-|z|^2/4) conj(z)^m / sqrt(2^m m!), m < dim."""
    m = np.arange(dim)
    if z == 0:
        coeffs = np.zeros(dim, dtype=complex)
        coeffs[0] = 1.0
        return coeffs
    log_modulus = (
        -abs(z) ** 2 / 4.0 + m * np.log(abs(z)) - log_monomial_norm(m)
    )
    return np.exp(log_modulus - 1j * m * np.angle(z))


def coherent_state(z, spec: FockSpec, warn: bool = True) -> FockVector:
    """
    Normalized reproducing kernel k_z truncated to ``spec``.

    The returned vector carries the truncation tail; it is logged as a
    warning when it exceeds ``QHA["TAIL_TOLERANCE"]`` and ``warn`` is set.
    """
    point = PhasePoint.of(z)
    check_point(point, spec)
    coeffs = np.ones(1, dtype=complex)
    for component, factor in zip(point.components, spec.factors):
        coeffs = np.kron(coeffs, coherent_coefficients(component, factor.dim))
    tail = coherent_tail(point, spec)
    if warn and tail > qha_setting("TAIL_TOLERANCE"):
        logger.warning(
            "coherent state at |z|=%.3g loses tail mass %.2e at D=%d",
            point.norm(),
            tail,
            spec.dim,
        )
    return FockVector(spec.from_kron(coeffs), spec, tail)


def kernel_overlap(z, w) -> complex:
    """Closed form <k_z, k_w> = exp(conj(z) w / 2 - |z|^2/4 - |w|^2/4).

    The inner product is linear in the first slot, so the untruncated
    value of ``coherent_state(z).inner(coherent_state(w))``.
    """
    z = PhasePoint.of(z).array
    w = PhasePoint.of(w).array
    exponent = np.sum(
        np.conj(z) * w / 2.0 - np.abs(z) ** 2 / 4.0 - np.abs(w) ** 2 / 4.0
    )
    return complex(np.exp(exponent))


def check_point(point: PhasePoint, spec: FockSpec):
    if point.n != spec.n:
        raise InvalidSpecError(
            f"phase point has {point.n} components, spec has n={spec.n}", "z"
        )
