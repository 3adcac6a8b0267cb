"""Polar quadrature against the Gaussian measure of the Fock space."""

from dataclasses import replace

import numpy as np
from scipy.special import roots_legendre

from quantum_harmonic.fock_core.basis import log_monomial_norm
from quantum_harmonic.models import QuadratureScheme

# Beyond sqrt(2 D) + MARGIN every basis density r^(2m+1) e^(-r^2/2) / N_m^2
# with m < D is below 1e-30 of its peak.
MARGIN = 12.0


def radial_scheme(
    dim: int, radial_nodes: int = None, angular_nodes: int = None
) -> QuadratureScheme:
    """
    Default scheme for Toeplitz entries of a ``dim``-truncation.

    Radial nodes are Gauss-Legendre on [0, sqrt(2 dim) + 12]; the basis
    densities enter the integrand explicitly, so the rule stays accurate
    for every degree below ``dim`` without Gauss-Laguerre weight tables
    (whose weights underflow at a few hundred nodes).
    """
    radius = float(np.sqrt(2.0 * dim) + MARGIN)
    count = radial_nodes or 2 * dim + 64
    angular = angular_nodes or max(64, 2 * dim + 2)
    nodes, weights = roots_legendre(count)
    return QuadratureScheme(
        radial_nodes=0.5 * radius * (nodes + 1.0),
        radial_weights=0.5 * radius * weights,
        angular_nodes=angular,
        radius=radius,
    )


def refined(scheme: QuadratureScheme) -> QuadratureScheme:
    """Same cut-off with doubled radial and angular node counts."""
    nodes, weights = roots_legendre(2 * scheme.radial_count)
    return QuadratureScheme(
        radial_nodes=0.5 * scheme.radius * (nodes + 1.0),
        radial_weights=0.5 * scheme.radius * weights,
        angular_nodes=2 * scheme.angular_nodes,
        radius=scheme.radius,
    )


def with_accuracy(scheme: QuadratureScheme, accuracy: float):
    return replace(scheme, accuracy=float(accuracy))


def basis_densities(scheme: QuadratureScheme, dim: int) -> np.ndarray:
    """
    ``(nodes, dim)`` table of r^(m + 1/2) e^(-r^2/4) / ||z^m||.

    Products of two columns give the radial integrand of an entry:
    <T_f e_m, e_l> = sum_i w_i phi_l(r_i) phi_m(r_i) f_(l-m)(r_i), where
    f_k is the k-th angular Fourier coefficient of f.
    """
    r = scheme.radial_nodes[:, None]
    m = np.arange(dim)[None, :]
    log_phi = (m + 0.5) * np.log(r) - r**2 / 4.0 - log_monomial_norm(m)
    return np.exp(log_phi)
