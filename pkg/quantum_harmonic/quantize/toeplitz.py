"""Toeplitz quantization T_f e_m = P(f e_m) by polar quadrature."""

import numpy as np

from quantum_harmonic.errors import InvalidSpecError, QuadratureError
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    FockSpec,
    OperatorMatrix,
    QuadratureScheme,
    SymbolFn,
)
from quantum_harmonic.quantize.quadrature import (
    basis_densities,
    radial_scheme,
    refined,
    with_accuracy,
)

logger = get_logger(__name__)

CONVERGENCE_TOL = 1e-9


def toeplitz_entries(
    f: SymbolFn, dim: int, scheme: QuadratureScheme
) -> np.ndarray:
    phi = basis_densities(scheme, dim)
    w = scheme.radial_weights
    entries = np.zeros((dim, dim), dtype=complex)
    if f.separable:
        k = f.angular_order
        if abs(k) >= dim:
            return entries
        weighted = w * np.asarray(f.radial(scheme.radial_nodes), complex)
        cols = np.arange(max(0, -k), dim - max(0, k))
        rows = cols + k
        entries[rows, cols] = np.einsum(
            "i,ij,ij->j", weighted, phi[:, rows], phi[:, cols]
        )
        return entries

    # Angular Fourier coefficients of f on every radial node.
    count = scheme.angular_nodes
    theta = 2.0 * np.pi * np.arange(count) / count
    points = scheme.radial_nodes[:, None] * np.exp(1j * theta)[None, :]
    coefficients = np.fft.fft(f(points), axis=1) / count
    for k in range(-(dim - 1), dim):
        cols = np.arange(max(0, -k), dim - max(0, k))
        rows = cols + k
        weighted = w * coefficients[:, k % count]
        entries[rows, cols] = np.einsum(
            "i,ij,ij->j", weighted, phi[:, rows], phi[:, cols]
        )
    return entries


def toeplitz_quadrature(
    f: SymbolFn,
    spec: FockSpec,
    scheme: QuadratureScheme = None,
    check: bool = True,
    tol: float = CONVERGENCE_TOL,
):
    """
    Toeplitz matrix of ``f`` and the scheme annotated with its accuracy.

    With ``check`` the entries are recomputed on the doubled scheme and
    the largest change is the reported accuracy; ``QuadratureError`` is
    raised when it exceeds ``tol``.
    """
    if spec.is_tensor:
        raise InvalidSpecError(
            "Toeplitz quantization is single-mode; build tensor operators "
            "with tensor_product",
            "spec",
        )
    scheme = scheme or radial_scheme(spec.dim)
    entries = toeplitz_entries(f, spec.dim, scheme)
    accuracy = float("nan")
    if check:
        finer = toeplitz_entries(f, spec.dim, refined(scheme))
        accuracy = float(np.max(np.abs(finer - entries)))
        if accuracy > tol:
            raise QuadratureError(
                f"Toeplitz entries of {f.name} changed by {accuracy:.2e} "
                f"under node doubling",
                f.name,
            )
        logger.debug(
            "toeplitz %s at D=%d converged to %.1e", f.name, spec.dim,
            accuracy,
        )
    return OperatorMatrix(entries, spec), with_accuracy(scheme, accuracy)


def toeplitz(
    f: SymbolFn,
    spec: FockSpec,
    scheme: QuadratureScheme = None,
    check: bool = True,
) -> OperatorMatrix:
    """Toeplitz operator T_f.

    Entries are <T_f e_m, e_l> = int f e_m conj(e_l) dmu.
    """
    matrix, _ = toeplitz_quadrature(f, spec, scheme, check)
    return matrix
