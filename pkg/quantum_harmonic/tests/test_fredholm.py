import numpy as np
import pytest

from quantum_harmonic.errors import (
    CurveThroughZeroError,
    IllConditionedError,
    InvalidSpecError,
    NotBandedError,
)
from quantum_harmonic.experiments.families import (
    congruence_members,
    index_parity_members,
)
from quantum_harmonic.fock_core import parity
from quantum_harmonic.fredholm import (
    band_profile,
    block_index,
    congruence_experiment,
    corollary_witness,
    counterexample_report,
    index_deficiency,
    index_parity_experiment,
    index_winding,
)
from quantum_harmonic.fredholm.experiments import congruence_signs
from quantum_harmonic.models import FockSpec, OperatorMatrix
from quantum_harmonic.parity import make_even_with_index
from quantum_harmonic.quantize import parse_symbol, toeplitz


def _shift(order, dim):
    return toeplitz(parse_symbol(f"winding:{order}"), FockSpec(dim))


def test_band_profile_of_shifts():
    profile = band_profile(_shift(1, 32))
    assert (profile.lower, profile.upper) == (1, 0)
    assert profile.width == 1
    profile = band_profile(_shift(-2, 32))
    assert (profile.lower, profile.upper) == (0, 2)


def test_band_profile_rejects_dense_matrix(spec16, rng):
    dense = rng.standard_normal((16, 16)) + 1.0
    with pytest.raises(NotBandedError):
        band_profile(OperatorMatrix(dense, spec16))


def test_unit_phase_toeplitz_has_index_minus_one():
    T = _shift(1, 200)
    deficiency = index_deficiency(T)
    assert deficiency.value == -1
    assert (deficiency.kernel_dim, deficiency.cokernel_dim) == (0, 1)
    assert index_winding(T).value == -1


@pytest.mark.parametrize("order", [2, -1])
def test_winding_toeplitz_index(order):
    T = _shift(order, 96)
    assert index_deficiency(T).value == -order
    assert index_winding(T).value == -order


@pytest.mark.parametrize("k", [2, 1, -1, -2])
def test_make_even_with_index(spec64, k):
    A = make_even_with_index(k, spec64)
    assert index_deficiency(A).value == k


def test_index_is_invariant_under_parity(spec64):
    A = make_even_with_index(2, spec64)
    assert index_deficiency(A @ parity(spec64)).value == 2


def test_block_index_of_even_shift(spec64):
    even_block, odd_block = block_index(make_even_with_index(1, spec64))
    assert even_block.value == 0
    assert odd_block.value == 1


def test_deficiency_needs_room_for_the_band():
    with pytest.raises(InvalidSpecError):
        index_deficiency(_shift(1, 16), interior=0.25)


def test_ill_conditioned_tolerance_is_refused(spec32):
    entries = np.eye(32, dtype=complex)
    entries[3, 3] = 1e-8
    with pytest.raises(IllConditionedError):
        index_deficiency(OperatorMatrix(entries, spec32), tol=1e-8)


def test_winding_refuses_curve_through_zero(spec64):
    zero = OperatorMatrix(np.zeros((64, 64)), spec64)
    with pytest.raises(CurveThroughZeroError):
        index_winding(zero)


def test_winding_rejects_tensor_spec():
    spec = FockSpec.product(4, 4)
    with pytest.raises(InvalidSpecError):
        index_winding(OperatorMatrix.identity(spec))


@pytest.mark.parametrize(
    "index, m, k, expected",
    [
        (-1, 1, 3, "-m"),
        (1, 1, 3, "+m"),
        (0, 0, 2, "both"),
        (1, 1, 2, "both"),
        (1, 0, 3, "neither"),
    ],
)
def test_congruence_signs(index, m, k, expected):
    assert congruence_signs(index, m, k) == expected


def test_index_parity_experiment(spec64):
    members = index_parity_members([2, 0], [1, 2])
    report = index_parity_experiment(members, spec64, stability=False)
    assert report.passed, report.failed_verdicts()
    classes = {row["member"]: row["class"] for row in report.rows["members"]}
    assert classes["T[winding:1]"] == 1
    assert classes["make_even:2"] == 0


@pytest.mark.parametrize("k", [3, 4])
def test_congruence_holds_with_minus_sign(spec64, k):
    report = congruence_experiment(k, congruence_members([1, 2]), spec64)
    assert report.passed
    assert report.scalars["empirical_sign"] == "-m"


def test_congruence_rejects_order_one(spec64):
    with pytest.raises(InvalidSpecError):
        congruence_experiment(1, congruence_members([1]), spec64)


def test_counterexample_even_operators_with_odd_index(spec64):
    report = counterexample_report(spec64, ks=(1, -1))
    assert report.passed
    indices = [row["index"] for row in report.rows["members"]]
    assert indices == [1, -1]


def test_corollary_witness(spec64):
    report = corollary_witness(_shift(1, 64))
    assert report.passed
    assert report.scalars["product_index"] == -2
    with pytest.raises(InvalidSpecError):
        corollary_witness(_shift(2, 64))
