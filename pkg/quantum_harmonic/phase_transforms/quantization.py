"""Weyl quantization op = F_W^-1 o F_sigma and the operator Fourier
transform F_op = F_W^-1 o F_sigma o F_W."""

import numpy as np
from scipy import optimize

from quantum_harmonic.fock_core.operators import parity
from quantum_harmonic.fock_core.weyl import weyl_compression
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ConventionParams,
    FockSpec,
    FourierFit,
    Grid,
    GridSymbol,
    OperatorMatrix,
    PhasePoint,
)
from quantum_harmonic.phase_transforms.fourier_weyl import (
    dilation,
    fourier_weyl,
    inverse_fourier_weyl,
    support_block,
)
from quantum_harmonic.phase_transforms.symplectic import symplectic_fourier

logger = get_logger(__name__)

DILATION_CANDIDATES = (1.0, -1.0, 2.0, -2.0, 0.5, -0.5)


def weyl_quantize(
    f: GridSymbol,
    spec: FockSpec,
    conv: ConventionParams = None,
    block: int = None,
) -> OperatorMatrix:
    """op(f) = F_W^-1(F_sigma f)."""
    conv = conv or ConventionParams.audited()
    return inverse_fourier_weyl(symplectic_fourier(f, conv), spec, conv, block)


def operator_fourier(
    A: OperatorMatrix,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
) -> OperatorMatrix:
    conv = conv or ConventionParams.audited()
    analysed = fourier_weyl(A, grid, conv)
    return inverse_fourier_weyl(
        symplectic_fourier(analysed, conv), A.spec, conv, block
    )


def delta_quantization_constant(conv: ConventionParams) -> float:
    """op(delta_0) = c_H c_sigma (int W_xi dxi) = 4 pi c_H c_sigma U."""
    return 4 * np.pi * conv.haar_normalization * conv.fourier_prefactor


def _fit_scale(target: np.ndarray, model: np.ndarray):
    denom = np.vdot(model, model)
    if denom == 0:
        return 0j, 1.0
    c = complex(np.vdot(model, target) / denom)
    residual = np.linalg.norm(target - c * model) / max(
        np.linalg.norm(target), np.finfo(float).tiny
    )
    return c, float(residual)


def fit_operator_fourier(
    A: OperatorMatrix,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
    refine: bool = True,
) -> FourierFit:
    """
    Fit F_op(A) ~ c D_t(A) U over dilations t, c by least squares.

    The candidates +-1, +-2, +-1/2 are scored on the leading ``block``;
    the best one is refined with a bounded scalar search.
    """
    conv = conv or ConventionParams.audited()
    block = block or min(A.spec.dim, 4 * support_block(A))
    target = operator_fourier(A, grid, conv, block).entries[:block, :block]
    U = np.diag(parity(A.spec).entries)[:block]

    def score(t):
        model = dilation(A, t, grid, conv, block).entries[:block, :block]
        return _fit_scale(target, model * U[None, :])

    table = []
    for t in DILATION_CANDIDATES:
        c, residual = score(t)
        table.append({"dilation": t, "scale": c, "residual": residual})
    best = min(table, key=lambda row: row["residual"])
    t_best, c_best, r_best = best["dilation"], best["scale"], best["residual"]
    if refine:
        lo, hi = sorted((0.8 * t_best, 1.2 * t_best))
        result = optimize.minimize_scalar(
            lambda t: score(t)[1],
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-4},
        )
        if result.fun < r_best:
            t_best = float(result.x)
            c_best, r_best = score(t_best)
    logger.debug(
        "F_op fit under %s: c=%s t=%.4g residual=%.2e",
        conv.name,
        c_best,
        t_best,
        r_best,
    )
    return FourierFit(c_best, t_best, r_best, tuple(table))


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(np.linalg.norm(b), np.finfo(float).tiny)
    return float(np.linalg.norm(a - b) / scale)


def shift_covariance_defect(
    A: OperatorMatrix,
    z,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
) -> float:
    """
    Relative defect of alpha_z(F_op(A)) = F_op(gamma_(2z)(A)).

    gamma_(2z)(A) = W_z A W_z is formed with exact compressions, so it is
    the compression of the untruncated product for interior A.
    """
    conv = conv or ConventionParams.audited()
    spec = A.spec
    block = block or spec.dim // 2
    W = weyl_compression(PhasePoint.of(z), spec).entries
    transformed = operator_fourier(A, grid, conv).entries
    left = W @ transformed @ W.conj().T
    moved = OperatorMatrix(W @ A.entries @ W, spec)
    right = operator_fourier(moved, grid, conv).entries
    return _relative(left[:block, :block], right[:block, :block])


def modulation_covariance_defect(
    A: OperatorMatrix,
    z,
    grid: Grid,
    conv: ConventionParams = None,
    block: int = None,
) -> float:
    """Relative defect of gamma_z(F_op(A)) = F_op(alpha_(z/2)(A))."""
    conv = conv or ConventionParams.audited()
    spec = A.spec
    block = block or spec.dim // 2
    half = weyl_compression(PhasePoint.of(z).scaled(0.5), spec).entries
    transformed = operator_fourier(A, grid, conv).entries
    left = half @ transformed @ half
    moved = OperatorMatrix(half @ A.entries @ half.conj().T, spec)
    right = operator_fourier(moved, grid, conv).entries
    return _relative(left[:block, :block], right[:block, :block])


def delta_alignment(
    op: OperatorMatrix, block: int
) -> tuple:
    """Normalized Frobenius overlap with U on the leading block, and the
    proportionality constant <U, op> / <U, U> there."""
    M = op.entries[:block, :block]
    U = np.diag(parity(op.spec).entries)[:block]
    overlap = np.sum(U * np.diag(M))
    norm = np.linalg.norm(M) * np.sqrt(block)
    alignment = float(abs(overlap) / norm) if norm else 0.0
    return alignment, complex(overlap / block)
