"""Parity-conjugation and ideal-membership checks of Weyl quantization."""

import numpy as np
from scipy import linalg

from quantum_harmonic.fock_core.linalg import numerical_rank
from quantum_harmonic.fock_core.operators import parity
from quantum_harmonic.models import (
    ConventionParams,
    ExperimentReport,
    FockSpec,
    GridSymbol,
)
from quantum_harmonic.phase_transforms.fourier_weyl import (
    inverse_fourier_weyl_batch,
)
from quantum_harmonic.phase_transforms.symplectic import symplectic_fourier

CHECK_TOL = 1e-3
RANK_TOL = 1e-8
MEMBERSHIP_TOL = 1e-6


def _quantize_many(symbols, spec, conv, block):
    transformed = [symplectic_fourier(f, conv) for f in symbols]
    return inverse_fourier_weyl_batch(transformed, spec, conv, block)


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    return float(
        np.linalg.norm(a - b) / max(np.linalg.norm(b), np.finfo(float).tiny)
    )


def parity_conjugation_check(
    f: GridSymbol,
    spec: FockSpec,
    conv: ConventionParams = None,
    block: int = None,
    tol: float = CHECK_TOL,
) -> ExperimentReport:
    """Relative Frobenius defect of U op(f) U - op(beta_- f)."""
    conv = conv or ConventionParams.audited()
    block = block or spec.dim
    A, B = _quantize_many([f, f.reflect()], spec, conv, block)
    U = parity(spec).entries
    conjugated = (U @ A.entries @ U)[:block, :block]
    reflected = B.entries[:block, :block]
    report = ExperimentReport("parity-conjugation")
    report.config = {"symbol": f.name, "block": block}
    report.conventions = conv.to_dict()
    defect = _relative(conjugated, reflected)
    report.scalars["defect"] = defect
    report.scalars["commutator"] = _relative(
        (U @ A.entries)[:block, :block], (A.entries @ U)[:block, :block]
    )
    report.check("conjugation_defect", defect, tol)
    return report


def _restricted_norm(M: np.ndarray, indices, adjoint: bool) -> float:
    """||M|_X|| (or ||M^*|_X||) relative to ||M||."""
    scale = max(np.linalg.norm(M, 2), np.finfo(float).tiny)
    cut = np.conj(M[indices, :]).T if adjoint else M[:, indices]
    return float(np.linalg.norm(cut, 2) / scale)


def ideal_membership_suite(
    f: GridSymbol,
    X,
    spec: FockSpec,
    conv: ConventionParams = None,
    Y=None,
    block: int = None,
    tol: float = CHECK_TOL,
    rank_tol: float = RANK_TOL,
    membership_tol: float = MEMBERSHIP_TOL,
) -> ExperimentReport:
    """
    Ideal membership of op(f) against op(F_sigma f) and op(beta_- f).

    B = op(F_sigma f) = op(f) U and C = op(beta_- f) = U op(f) U, so
    singular values and ranks agree, the right ideal
    I_X^* = {A : A^*|_X = 0} holds for A and B together, and the left
    ideal I_Y = {A : A|_Y = 0} and the two-sided I_Y cap I_X^* hold for A
    and C together. X and Y are lists of basis indices. The left lemma
    U op(f) = op(F_sigma beta_- f) is checked on the way.
    """
    conv = conv or ConventionParams.audited()
    block = block or spec.dim
    X = list(X)
    Y = X if Y is None else list(Y)
    reflected = f.reflect()
    A, B, C, L = _quantize_many(
        [f, symplectic_fourier(f, conv), reflected,
         symplectic_fourier(reflected, conv)],
        spec,
        conv,
        block,
    )
    a, b, c, left = (
        M.entries[:block, :block] for M in (A, B, C, L)
    )
    report = ExperimentReport("ideal-suite")
    report.config = {"symbol": f.name, "X": X, "Y": Y, "block": block}
    report.conventions = conv.to_dict()

    s_a, s_b, s_c = (linalg.svdvals(M) for M in (a, b, c))
    scale = max(s_a[0], np.finfo(float).tiny)
    report.arrays["singular_values"] = np.stack([s_a, s_b, s_c], axis=1)
    report.check(
        "singular_values_B", float(np.max(np.abs(s_a - s_b)) / scale), tol
    )
    report.check(
        "singular_values_C", float(np.max(np.abs(s_a - s_c)) / scale), tol
    )
    ranks = [numerical_rank(s, rank_tol) for s in (s_a, s_b, s_c)]
    report.scalars["ranks"] = ranks
    report.flag("ranks_agree", len(set(ranks)) == 1)

    U = np.diag(parity(spec).entries)[:block]
    report.check("left_lemma", _relative(U[:, None] * a, left), tol)

    right_a = _restricted_norm(a, X, adjoint=True)
    right_b = _restricted_norm(b, X, adjoint=True)
    left_a = _restricted_norm(a, Y, adjoint=False)
    left_c = _restricted_norm(c, Y, adjoint=False)
    right_c = _restricted_norm(c, X, adjoint=True)
    report.scalars.update(
        {
            "right_ideal_A": right_a,
            "right_ideal_B": right_b,
            "left_ideal_A": left_a,
            "left_ideal_C": left_c,
        }
    )
    in_right = (right_a < membership_tol, right_b < membership_tol)
    in_left = (left_a < membership_tol, left_c < membership_tol)
    in_both = (
        in_left[0] and in_right[0],
        in_left[1] and right_c < membership_tol,
    )
    report.scalars["membership"] = {
        "right": list(in_right),
        "left": list(in_left),
        "two_sided": list(in_both),
    }
    report.flag("right_ideal_agrees", in_right[0] == in_right[1])
    report.flag("left_ideal_agrees", in_left[0] == in_left[1])
    report.flag("two_sided_ideal_agrees", in_both[0] == in_both[1])
    return report
