"""
Fourier-Weyl analysis F_W(A)(xi) = Tr(A W_xi^*) and its inverse
F_W^-1(f) = c_H int f(xi) W_xi dxi.

Both sides use exact compressions of the Weyl operators (Laguerre closed
form), since grid points lie far outside the range where the truncated
exponential is accurate. Analysis only needs the support block of A;
synthesis is computed on a requested output block.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.polynomial import chebyshev

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import ExtrapolationError, InvalidSpecError
from quantum_harmonic.fock_core.weyl import (
    CHUNK_ENTRIES,
    weyl_matrix_elements,
)
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ConventionParams,
    FockSpec,
    Grid,
    GridSymbol,
    OperatorMatrix,
)
from quantum_harmonic.models.helper.enums import Provenance_Choices
from quantum_harmonic.phase_transforms.symplectic import guard_boundary

logger = get_logger(__name__)

EXTRAPOLATION_NODES = 12
EXTRAPOLATION_WIDTH = 0.4
EXTRAPOLATION_TOL = 1e-3
SUPPORT_TOL = 1e-14


def support_block(A: OperatorMatrix, tol: float = SUPPORT_TOL) -> int:
    """Smallest b with |A| <= tol * max|A| outside the leading b x b
    block."""
    magnitude = np.abs(A.entries)
    mask = magnitude > tol * magnitude.max(initial=0.0)
    rows = np.flatnonzero(mask.any(axis=1))
    cols = np.flatnonzero(mask.any(axis=0))
    if rows.size == 0:
        return 1
    return int(max(rows.max(), cols.max()) + 1)


def _chunk_slices(count: int, block: int):
    step = max(1, CHUNK_ENTRIES // (block * block))
    return [slice(start, start + step) for start in range(0, count, step)]


def _map(fn, items, workers):
    workers = workers or qha_setting("WORKERS")
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _analysis_block(operators, block):
    if any(A.spec.is_tensor for A in operators):
        raise InvalidSpecError(
            "phase-space transforms are single-mode", "spec"
        )
    size = max(support_block(A) for A in operators)
    block = size if block is None else block
    if block < size:
        raise InvalidSpecError(
            f"block {block} cuts the operator support {size}", "block"
        )
    dim = operators[0].spec.dim
    if size > dim // 2:
        logger.warning(
            "operator support %d leaves the interior (D/2 = %d)",
            size,
            dim // 2,
        )
    return block


def fourier_weyl_points(
    operators, points, block: int = None, workers: int = None
) -> np.ndarray:
    """
    F_W of a stack of operators at arbitrary points.

    Returns shape ``(len(operators),) + points.shape``; the Weyl table is
    shared across the stack.
    """
    operators = list(operators)
    block = _analysis_block(operators, block)
    stack = np.stack([A.entries[:block, :block] for A in operators])
    points = np.asarray(points, dtype=complex)
    flat = points.reshape(-1)

    def analyse(part):
        W = weyl_matrix_elements(flat[part], block)
        # Tr(A W_xi^*) = sum_lm A[l, m] conj(W_xi[l, m]).
        return np.einsum("plm,blm->bp", np.conj(W), stack)

    parts = _map(analyse, _chunk_slices(flat.size, block), workers)
    values = np.concatenate(parts, axis=1)
    return values.reshape((len(operators),) + points.shape)


def fourier_weyl_batch(
    operators, grid: Grid, block: int = None, workers: int = None
):
    values = fourier_weyl_points(operators, grid.points, block, workers)
    return [
        GridSymbol(grid, v, Provenance_Choices.TRANSFORM, f"F_W[{i}]")
        for i, v in enumerate(values)
    ]


def fourier_weyl(
    A: OperatorMatrix,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
) -> GridSymbol:
    """F_W(A) sampled on the grid; W_xi^* is W_(-xi), the exact inverse.

    ``conv`` only labels the result: analysis carries no normalization.
    """
    symbol = fourier_weyl_batch([A], grid, block)[0]
    conv = conv or ConventionParams.audited()
    return symbol.derived(symbol.samples, f"F_W[{conv.name}]", conv.tag)


def synthesize(
    values,
    points,
    weight: float,
    dim: int,
    block: int = None,
    workers: int = None,
) -> np.ndarray:
    """weight * sum_p values[b, p] W_(points[p]) on the leading block.

    Returns a ``(batch, dim, dim)`` array zero outside the block.
    """
    values = np.atleast_2d(np.asarray(values, dtype=complex))
    values = values.reshape(values.shape[0], -1)
    flat = np.asarray(points, dtype=complex).reshape(-1)
    block = dim if block is None else min(block, dim)

    def accumulate(part):
        W = weyl_matrix_elements(flat[part], block)
        return np.einsum("bp,plm->blm", values[:, part], W)

    parts = _map(accumulate, _chunk_slices(flat.size, block), workers)
    out = np.zeros((values.shape[0], dim, dim), dtype=complex)
    out[:, :block, :block] = weight * np.sum(parts, axis=0)
    return out


def inverse_fourier_weyl_batch(
    symbols,
    spec: FockSpec,
    conv: ConventionParams = None,
    block: int = None,
    workers: int = None,
    strict: bool = False,
):
    conv = conv or ConventionParams.audited()
    symbols = list(symbols)
    grid = symbols[0].grid
    for f in symbols:
        guard_boundary(f, strict)
    weight = conv.haar_normalization * grid.cell_area
    stack = np.stack([f.samples for f in symbols])
    entries = synthesize(
        stack, grid.points, weight, spec.dim, block, workers
    )
    return [OperatorMatrix(e, spec, conv.tag) for e in entries]


def inverse_fourier_weyl(
    f: GridSymbol,
    spec: FockSpec,
    conv: ConventionParams = None,
    block: int = None,
    strict: bool = False,
) -> OperatorMatrix:
    """
    c_H h^2 sum_xi f(xi) W_xi over the grid, on the leading ``block``
    (default D) basis vectors.

    Boundary mass of ``f`` logs an aliasing warning (raises when
    ``strict``).
    """
    return inverse_fourier_weyl_batch([f], spec, conv, block, None, strict)[0]


def dilation(
    A: OperatorMatrix,
    t: float,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
) -> OperatorMatrix:
    """
    D_t(A) = F_W^-1[F_W(A)(t .)].

    Substituting u = t xi gives c_H t^-2 int F_W(A)(u) W_(u/t) du, which
    keeps the sampled function on the grid it decays on.
    """
    if t == 0:
        raise InvalidSpecError("dilation factor must be nonzero", "t")
    conv = conv or ConventionParams.audited()
    analysed = fourier_weyl_points([A], grid.points)
    weight = conv.haar_normalization * grid.cell_area / t**2
    entries = synthesize(
        analysed, grid.points / t, weight, A.spec.dim, block
    )[0]
    return OperatorMatrix(entries, A.spec, conv.tag)


def regularized_trace(
    A: OperatorMatrix,
    damping: float = None,
    order: int = EXTRAPOLATION_NODES - 1,
    tol: float = EXTRAPOLATION_TOL,
) -> complex:
    """
    Abel-regularized trace lim_(r -> 1-) sum_m r^m A_mm.

    The partial sums are sampled at Chebyshev nodes on
    [damping - 0.4, damping] (default damping = 10^(-14/D), where the
    truncated tail r^D is negligible), fitted by a Chebyshev series and
    evaluated at r = 1. Fits of degree ``order`` and ``order - 2`` must
    agree within ``tol``, else ``ExtrapolationError``.
    """
    D = A.spec.dim
    top = 10.0 ** (-14.0 / D) if damping is None else float(damping)
    if not 0.0 < top < 1.0:
        raise InvalidSpecError("damping must lie in (0, 1)", "damping")
    low = max(top - EXTRAPOLATION_WIDTH, 0.0)
    k = np.arange(EXTRAPOLATION_NODES)
    nodes = np.cos(np.pi * (2 * k + 1) / (2 * EXTRAPOLATION_NODES))
    radii = low + (top - low) * (nodes + 1.0) / 2.0
    diagonal = np.diag(A.entries)
    sums = np.array(
        [np.sum(r ** np.arange(D) * diagonal) for r in radii]
    )
    target = 2.0 * (1.0 - low) / (top - low) - 1.0

    def extrapolate(degree):
        real = chebyshev.chebfit(nodes, sums.real, degree)
        imag = chebyshev.chebfit(nodes, sums.imag, degree)
        return complex(
            chebyshev.chebval(target, real), chebyshev.chebval(target, imag)
        )

    value = extrapolate(order)
    check = extrapolate(order - 2)
    if abs(value - check) > tol * max(1.0, abs(value)):
        raise ExtrapolationError(
            f"Abel extrapolation unstable: {value:.6g} vs {check:.6g}",
            "damping",
        )
    return value


def regularized_fourier_weyl(
    A: OperatorMatrix, points, damping: float = None, tol=EXTRAPOLATION_TOL
) -> np.ndarray:
    """F_W(A)(xi) for non-trace-class A through ``regularized_trace``."""
    points = np.asarray(points, dtype=complex)
    values = np.empty(points.shape, dtype=complex)
    for index, xi in np.ndenumerate(points):
        W_minus = weyl_matrix_elements(-xi, A.spec.dim)
        product = OperatorMatrix(A.entries @ W_minus, A.spec)
        values[index] = regularized_trace(product, damping, tol=tol)
    return values
