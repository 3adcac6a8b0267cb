"""
Symplectic Fourier transform on grid symbols.

F_sigma(f)(z) = c * int f(w) e^(i s sigma(w, z)) dw, with
sigma(w, z) = Im(w conj(z)) = b x - a y for w = a + ib, z = x + iy.

The phase factorizes over the two real coordinates, so the Riemann sum
is a pair of dense matrix products (a matrix Fourier transform) that
evaluates the transform at the grid's own points.
"""

import numpy as np

from quantum_harmonic.errors import AliasingError
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import ConventionParams, Grid, GridSymbol

logger = get_logger(__name__)

BOUNDARY_TOL = 1e-8


def boundary_note(f: GridSymbol, tol: float = BOUNDARY_TOL):
    """Message when |f| on the outer ring exceeds ``tol`` (relative to
    the sup of |f|), else None."""
    peak = float(np.abs(f.samples).max())
    edge = f.boundary_max()
    if peak == 0.0 or edge <= tol * peak:
        return None
    return (
        f"{f.name or 'symbol'} reaches {edge / peak:.1e} of its peak on the "
        f"grid boundary (L={f.grid.extent:g}); transforms may alias"
    )


def guard_boundary(f: GridSymbol, strict: bool = False, tol=BOUNDARY_TOL):
    note = boundary_note(f, tol)
    if note is None:
        return None
    if strict:
        raise AliasingError(note, "grid.L")
    logger.warning(note)
    return note


def phase_matrix(grid: Grid, scale: float) -> np.ndarray:
    """exp(i s x_j x_k) over grid coordinates."""
    g = grid.coords
    return np.exp(1j * scale * np.outer(g, g))


def symplectic_fourier(
    f: GridSymbol, conv: ConventionParams = None, strict: bool = False
) -> GridSymbol:
    """
    F_sigma(f) sampled on the grid of ``f``.

    With sample index ``[i, j]`` for ``x_i + i x_j`` the sum is
    ``c h^2 P f^T conj(P)``, P = exp(i s x x^T). Boundary mass above
    1e-8 of the peak logs an aliasing warning (``AliasingError`` when
    ``strict``).
    """
    conv = conv or ConventionParams.audited()
    guard_boundary(f, strict)
    P = phase_matrix(f.grid, conv.fourier_phase_scale)
    transformed = (
        conv.fourier_prefactor
        * f.grid.cell_area
        * (P @ f.samples.T @ np.conj(P))
    )
    return f.derived(transformed, f"F_sigma({f.name})", conv.tag)


def gaussian_fourier(a: float, z, conv: ConventionParams = None):
    """Closed form F_sigma(e^(-a|w|^2))(z) = c (pi/a) e^(-s^2|z|^2/(4a))."""
    conv = conv or ConventionParams.audited()
    s = conv.fourier_phase_scale
    z = np.asarray(z, dtype=complex)
    return (
        conv.fourier_prefactor
        * (np.pi / a)
        * np.exp(-(s**2) * np.abs(z) ** 2 / (4 * a))
    )


def involution_defect(f: GridSymbol, conv: ConventionParams = None):
    """max |F_sigma(F_sigma f) - f| on the grid."""
    twice = symplectic_fourier(symplectic_fourier(f, conv), conv)
    return float(np.max(np.abs(twice.samples - f.samples)))
