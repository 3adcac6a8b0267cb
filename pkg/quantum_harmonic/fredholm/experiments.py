"""Index-parity, congruence and counterexample experiments."""

import numpy as np

from quantum_harmonic.errors import CurveThroughZeroError, InvalidSpecError
from quantum_harmonic.fock_core.operators import parity, parity_rotation
from quantum_harmonic.fredholm.index import (
    INDEX_TOL,
    block_index,
    index_deficiency,
    index_winding,
)
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import ExperimentReport, FockSpec, OperatorMatrix
from quantum_harmonic.parity.even_odd import (
    make_even_with_index,
    symmetry_class,
)
from quantum_harmonic.quantize.symbols import parse_symbol
from quantum_harmonic.quantize.toeplitz import toeplitz

logger = get_logger(__name__)


def _winding_or_none(A: OperatorMatrix, radius, samples, report, name):
    try:
        return index_winding(A, radius, samples)
    except CurveThroughZeroError as exc:
        report.warnings.append(f"{name}: {exc.message}")
        return None


def index_parity_experiment(
    members,
    spec: FockSpec,
    tol: float = INDEX_TOL,
    interior: float = 0.5,
    radius: float = 6.0,
    samples: int = 720,
    stability: bool = True,
) -> ExperimentReport:
    """
    Symmetry class and index of every family member, judged on
    index = class (mod 2).

    Toeplitz members additionally get the winding cross-check and the
    block-index equality; every member gets unitary invariance under
    right multiplication by U and, with ``stability``, the same integer at
    2D.
    """
    report = ExperimentReport("index-parity")
    report.config = {"dim": spec.dim, "tol": tol, "interior": interior}
    rows = []
    U = parity(spec)
    for member in members:
        A = member.build(spec)
        m = symmetry_class(A, -1.0, 2)
        if m is None:
            raise InvalidSpecError(
                f"{member.name} is neither even nor odd", member.name
            )
        estimate = index_deficiency(A, tol, interior)
        row = {
            "member": member.name,
            "class": m,
            "method": str(estimate.method),
            "index": estimate.value,
            "kernel": estimate.kernel_dim,
            "cokernel": estimate.cokernel_dim,
        }
        report.check(
            f"{member.name}.parity", (estimate.value - m) % 2, 0, "=="
        )
        report.check(
            f"{member.name}.unitary_invariance",
            index_deficiency(A @ U, tol, interior).value,
            estimate.value,
            "==",
        )
        if stability:
            doubled = member.build(FockSpec(2 * spec.dim))
            row["index_2d"] = index_deficiency(doubled, tol, interior).value
            report.check(
                f"{member.name}.stable_in_dim",
                row["index_2d"],
                estimate.value,
                "==",
            )
        if m == 0:
            even_block, odd_block = block_index(A, tol, interior)
            row["block_even"] = even_block.value
            row["block_odd"] = odd_block.value
            if member.toeplitz:
                report.check(
                    f"{member.name}.block_indices_agree",
                    even_block.value,
                    odd_block.value,
                    "==",
                )
        if member.toeplitz:
            winding = _winding_or_none(
                A, radius, samples, report, member.name
            )
            if winding is not None:
                row["winding_index"] = winding.value
                report.check(
                    f"{member.name}.winding_agrees",
                    winding.value,
                    estimate.value,
                    "==",
                )
        rows.append(row)
    report.rows["members"] = rows
    return report


def congruence_signs(index: int, m: int, k: int) -> str:
    """Which of index = +m and index = -m (mod k) hold."""
    plus = (index - m) % k == 0
    minus = (index + m) % k == 0
    if plus and minus:
        return "both"
    if plus:
        return "+m"
    if minus:
        return "-m"
    return "neither"


def congruence_experiment(
    k: int,
    members,
    spec: FockSpec,
    tol: float = INDEX_TOL,
    interior: float = 0.5,
) -> ExperimentReport:
    """
    Index congruence mod k against the rotation class m.

    The satisfied sign is reported, not assumed; the primary verdict is
    that one sign holds for every member.
    """
    if k < 2:
        raise InvalidSpecError("order k must be at least 2", "k")
    theta = np.exp(2j * np.pi / k)
    report = ExperimentReport("congruence")
    report.config = {"k": k, "dim": spec.dim, "tol": tol}
    rows = []
    for member in members:
        A = member.build(spec)
        m = symmetry_class(A, theta, k)
        if m is None:
            raise InvalidSpecError(
                f"{member.name} has no rotation class for k={k}", member.name
            )
        index = index_deficiency(A, tol, interior).value
        rows.append(
            {
                "member": member.name,
                "class": m,
                "index": index,
                "index_mod_k": index % k,
                "minus_m_mod_k": (-m) % k,
                "plus_m_mod_k": m % k,
                "sign": congruence_signs(index, m, k),
            }
        )
    report.rows["members"] = rows
    plus_all = all(r["sign"] in ("+m", "both") for r in rows)
    minus_all = all(r["sign"] in ("-m", "both") for r in rows)
    if plus_all and minus_all:
        sign = "both"
    elif minus_all:
        sign = "-m"
    elif plus_all:
        sign = "+m"
    else:
        sign = "mixed"
    report.scalars["empirical_sign"] = sign
    report.flag("consistent_sign", sign != "mixed")
    report.flag("plus_m_congruence", plus_all, primary=False)
    report.flag("minus_m_congruence", minus_all, primary=False)
    if k > 2 and minus_all and not plus_all:
        report.warnings.append(
            f"index = -m (mod {k}) holds; index = +m (mod {k}) fails"
        )
    return report


def counterexample_report(
    spec: FockSpec, ks=(1, -1), tol: float = INDEX_TOL
) -> ExperimentReport:
    """
    Even operators with odd index, built outside C_1.

    Each make_even_with_index(k) has class 0 and index k; its block indices
    are 0 and k, so the block-index equality fails as expected.
    """
    report = ExperimentReport("counterexample")
    report.config = {"dim": spec.dim, "ks": list(ks)}
    rows = []
    for k in ks:
        A = make_even_with_index(k, spec)
        m = symmetry_class(A, -1.0, 2)
        index = index_deficiency(A, tol).value
        even_block, odd_block = block_index(A, tol)
        rows.append(
            {
                "k": k,
                "class": m,
                "index": index,
                "block_even": even_block.value,
                "block_odd": odd_block.value,
            }
        )
        report.check(f"k={k}.even", m, 0, "==")
        report.check(f"k={k}.index", index, k, "==")
        report.flag(f"k={k}.index_odd", index % 2 == 1)
        report.flag(
            f"k={k}.blocks_differ",
            even_block.value != odd_block.value,
            note="expected violation outside C_1",
        )
    report.rows["members"] = rows
    return report


def corollary_witness(
    A: OperatorMatrix, tol: float = INDEX_TOL, interior: float = 0.5
) -> ExperimentReport:
    """
    For odd A: A T_(z/|z|) is even and its index is index(A) - 1.
    """
    if symmetry_class(A, -1.0, 2) != 1:
        raise InvalidSpecError("corollary witness needs an odd operator", "A")
    shift = toeplitz(parse_symbol("winding:1"), A.spec)
    product = A @ shift
    report = ExperimentReport("corollary-witness")
    index_a = index_deficiency(A, tol, interior).value
    index_product = index_deficiency(product, tol, interior).value
    report.scalars.update({"index": index_a, "product_index": index_product})
    report.check("product_even", symmetry_class(product, -1.0, 2), 0, "==")
    report.check("product_index", index_product, index_a - 1, "==")
    report.check(
        "rotation_invariance",
        index_deficiency(
            A @ parity_rotation(np.exp(2j * np.pi / 3), A.spec), tol, interior
        ).value,
        index_a,
        "==",
    )
    return report
