"""Closed forms and independent quadratures used to check quantize."""

import numpy as np
from numpy.polynomial.hermite_e import hermegauss
from scipy import integrate
from scipy.special import gammaln


def weighted_shift_weights(count: int) -> np.ndarray:
    """alpha_m = Gamma(m + 3/2) / sqrt(m! (m+1)!), m < count."""
    m = np.arange(count, dtype=float)
    return np.exp(
        gammaln(m + 1.5) - 0.5 * (gammaln(m + 1.0) + gammaln(m + 2.0))
    )


def weighted_shift_weight_by_integration(m: int) -> float:
    """alpha_m from adaptive quadrature of the radial integral.

    Integrates r^(2m+2) e^(-r^2/2) / sqrt(2^m m! 2^(m+1) (m+1)!) in the
    log domain, independently of the Gauss-Legendre scheme.
    """
    log_norm = 0.5 * (
        (2 * m + 1) * np.log(2.0) + gammaln(m + 1.0) + gammaln(m + 2.0)
    )

    def integrand(r):
        if r == 0.0:
            return 0.0
        return np.exp((2 * m + 2) * np.log(r) - r**2 / 2.0 - log_norm)

    peak = np.sqrt(2 * m + 2)
    value, _ = integrate.quad(
        integrand,
        0.0,
        peak + 40.0,
        points=[peak],
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    return float(value)


def gaussian_convolution(a: float, z) -> np.ndarray:
    """(f * g)(z) for f = e^(-a|w|^2) and g = (2 pi)^-1 e^(-|w|^2/2)."""
    z = np.asarray(z, dtype=complex)
    return np.exp(-a * np.abs(z) ** 2 / (2 * a + 1)) / (2 * a + 1)


def heat_smoothed(f, z, order: int = 64) -> complex:
    """(f * g)(z) by tensor Gauss-Hermite quadrature.

    g is the standard Gaussian in each real coordinate, so the convolution
    is the expectation of f(z + X + iY) with X, Y ~ N(0, 1).
    """
    nodes, weights = hermegauss(order)
    shifts = nodes[:, None] + 1j * nodes[None, :]
    values = f(z + shifts)
    total = np.sum(weights[:, None] * weights[None, :] * values)
    return complex(total / (2 * np.pi))
