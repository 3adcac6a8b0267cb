"""
Twisted convolution of grid symbols,
(f *_sigma g)(xi) = c_t int f(xi - w) g(w) e^(i t sigma(xi, w)) dw.

Differences xi - w of grid points are grid points again (index
k - j + N/2 per axis); samples falling off the grid count as zero.
"""

import numpy as np
from scipy import signal

from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.models import ConventionParams, GridSymbol
from quantum_harmonic.phase_transforms.symplectic import guard_boundary

REFERENCE_MAX_N = 64


def _check_pair(f: GridSymbol, g: GridSymbol):
    if f.grid != g.grid:
        raise InvalidSpecError("symbols live on different grids", "grid")


def twisted_convolution_reference(
    f: GridSymbol, g: GridSymbol, conv: ConventionParams = None
) -> GridSymbol:
    """Direct O(N^4) double sum; limited to N <= 64."""
    _check_pair(f, g)
    conv = conv or ConventionParams.audited()
    grid = f.grid
    N = grid.points_per_axis
    if N > REFERENCE_MAX_N:
        raise InvalidSpecError(
            f"reference twisted convolution is limited to N <= "
            f"{REFERENCE_MAX_N}",
            "grid.N",
        )
    x = grid.coords
    t = conv.twisted_phase_scale
    half = N // 2
    a, b = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    out = np.zeros((N, N), dtype=complex)
    for k in range(N):
        for l in range(N):
            ri, rj = k - a + half, l - b + half
            valid = (ri >= 0) & (ri < N) & (rj >= 0) & (rj < N)
            shifted = np.zeros((N, N), dtype=complex)
            shifted[valid] = f.samples[ri[valid], rj[valid]]
            # sigma(xi, w) = Im(xi conj(w)) = y_xi * a_w - x_xi * b_w
            phase = np.exp(1j * t * (x[l] * x[a] - x[k] * x[b]))
            out[k, l] = np.sum(shifted * g.samples * phase)
    out *= conv.twisted_prefactor * grid.cell_area
    return f.derived(out, f"{f.name}*_sigma{g.name}")


def twisted_convolution(
    f: GridSymbol,
    g: GridSymbol,
    conv: ConventionParams = None,
    strict: bool = False,
) -> GridSymbol:
    """
    Blocked evaluation: per output row k and input row j the sum over the
    second coordinate is an ordinary 1-D convolution, done by FFT.
    """
    _check_pair(f, g)
    conv = conv or ConventionParams.audited()
    guard_boundary(f, strict)
    guard_boundary(g, strict)
    grid = f.grid
    N = grid.points_per_axis
    x = grid.coords
    t = conv.twisted_phase_scale
    half = N // 2
    columns = np.arange(N)
    out = np.empty((N, N), dtype=complex)
    for k in range(N):
        rows = np.arange(max(0, k - half + 1), min(N, k + half + 1))
        rows = rows[(k - rows + half >= 0) & (k - rows + half < N)]
        f_rows = f.samples[k - rows + half, :]
        g_rows = g.samples[rows, :] * np.exp(-1j * t * x[k] * x[None, :])
        full = signal.fftconvolve(f_rows, g_rows, mode="full", axes=1)
        inner = full[:, half : half + N]
        phase = np.exp(1j * t * np.outer(x[rows], x[columns]))
        out[k] = np.sum(inner * phase, axis=0)
    out *= conv.twisted_prefactor * grid.cell_area
    return f.derived(out, f"{f.name}*_sigma{g.name}")
