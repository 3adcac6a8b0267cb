import numpy as np
import pytest
from numpy.testing import assert_allclose

from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.fock_core import parity, tensor_product
from quantum_harmonic.models import FockSpec, OperatorMatrix
from quantum_harmonic.models.helper.enums import Continuity_Mode_Choices
from quantum_harmonic.parity import (
    assemble_blocks,
    block_decompose,
    c_minus_one_witness,
    continuity_modulus,
    even_odd_split,
    fixed_eigenspace_complement,
    intersection_probe,
    localization_profile,
    make_even_with_index,
    module_witness,
    rank_one_localization,
    symmetry_class,
    symmetry_defects,
    theta_rotation_witness,
    theta_shift_bound_check,
)
from quantum_harmonic.parity.localization import identity_localization
from quantum_harmonic.quantize import parse_symbol, toeplitz

RADII = np.linspace(0.0, 3.0, 7)


def _random(spec, rng, support=None):
    support = support or spec.dim
    entries = np.zeros((spec.dim, spec.dim), dtype=complex)
    entries[:support, :support] = rng.standard_normal(
        (support, support)
    ) + 1j * rng.standard_normal((support, support))
    return OperatorMatrix(entries, spec)


def test_even_odd_split(spec16, rng):
    A = _random(spec16, rng)
    split = even_odd_split(A)
    U = parity(spec16).entries
    assert split.residual < 1e-12
    even, odd = split.even_part.entries, split.odd_part.entries
    assert_allclose(U @ even @ U, even, atol=1e-12)
    assert_allclose(U @ odd @ U, -odd, atol=1e-12)


def test_block_decompose_roundtrip(spec16, rng):
    A = _random(spec16, rng)
    a11, a12, a21, a22 = block_decompose(A)
    assert a11.shape == a22.shape == (8, 8)
    rebuilt = assemble_blocks((a11, a12, a21, a22), spec16)
    assert_allclose(rebuilt.entries, A.entries)


def test_even_operator_has_no_off_diagonal_blocks(spec16):
    _, a12, a21, _ = block_decompose(make_even_with_index(2, spec16))
    assert not a12.any()
    assert not a21.any()


@pytest.mark.parametrize(
    "symbol, expected", [("winding:1", 1), ("winding:2", 0), ("winding:3", 1)]
)
def test_symmetry_class_of_toeplitz_windings(spec32, symbol, expected):
    T = toeplitz(parse_symbol(symbol), spec32)
    assert symmetry_class(T, -1.0, 2) == expected


def test_symmetry_class_mod_three(spec32):
    theta = np.exp(2j * np.pi / 3)
    T = toeplitz(parse_symbol("winding:2"), spec32)
    assert symmetry_class(T, theta, 3) == 2
    defects = symmetry_defects(T, theta, 3)
    assert defects[2] < 1e-12
    assert defects[0] > 0.5


def test_symmetry_class_of_generic_operator_is_none(spec16, rng):
    assert symmetry_class(_random(spec16, rng), -1.0, 2) is None


def test_symmetry_defects_rejects_wrong_root(spec16):
    with pytest.raises(InvalidSpecError):
        symmetry_defects(OperatorMatrix.identity(spec16), 1j, 3)


def test_make_even_with_index_bounds(spec16):
    assert symmetry_class(make_even_with_index(3, spec16), -1.0, 2) == 0
    with pytest.raises(InvalidSpecError):
        make_even_with_index(4, spec16)


def test_parity_is_in_modulation_class_only():
    spec = FockSpec(48)
    U = parity(spec)
    radii = [0.0, 0.5, 1.0]
    modulation = continuity_modulus(
        U, Continuity_Mode_Choices.MODULATION, radii=radii
    )
    shift = continuity_modulus(U, Continuity_Mode_Choices.SHIFT, radii=radii)
    assert np.max(modulation.moduli) < 1e-8
    assert shift.moduli[-1] > 0.5
    assert modulation.moduli[0] == shift.moduli[0] == 0.0


def test_shift_modulus_of_compact_operator_grows_with_radius(spec32):
    A = OperatorMatrix.rank_one(spec32, 0, 0)
    profile = continuity_modulus(A, "shift", radii=[0.0, 0.25, 0.5, 1.0])
    assert np.all(np.diff(profile.moduli) > 0)
    assert profile.moduli[-1] <= 2.0 + 1e-12


def test_continuity_modulus_rejects_bad_arguments(spec16, vacuum16):
    with pytest.raises(InvalidSpecError):
        continuity_modulus(vacuum16, "shift", radii=[-0.5])
    with pytest.raises(InvalidSpecError, match="shift, modulation"):
        continuity_modulus(vacuum16, "rotation")


def test_modulation_class_is_parity_times_shift_class(spec32):
    A = OperatorMatrix.rank_one(spec32, 0, 0) + OperatorMatrix.rank_one(
        spec32, 1, 0
    ) * 0.5
    gap, modulation, shift = c_minus_one_witness(A)
    assert gap < 1e-10
    assert np.max(shift.moduli) > 0.1
    with pytest.raises(InvalidSpecError):
        c_minus_one_witness(A, directions=3)


def test_theta_class_is_rotation_times_shift_class(spec32):
    A = OperatorMatrix.rank_one(spec32, 1, 0)
    gap, _, _ = theta_rotation_witness(A, 1j, radii=[0.0, 0.5, 1.0])
    assert gap < 1e-10


def test_theta_shift_bound(spec32):
    A = OperatorMatrix.rank_one(spec32, 0, 0)
    lhs, rhs = theta_shift_bound_check(A, 1j, 0.5 + 0.25j, -0.3 + 0.4j)
    assert lhs <= rhs + 1e-10


def test_modulation_class_is_module_over_shift_class(spec32):
    A = OperatorMatrix.rank_one(spec32, 0, 0)
    B = parity(spec32)
    report = module_witness(A, B, radii=[0.0, 0.5, 1.0], directions=4)
    assert report.passed
    with pytest.raises(InvalidSpecError):
        module_witness(A, parity(FockSpec(16)))


@pytest.mark.parametrize("a, b", [(0, 0), (1, 0), (2, 3)])
def test_rank_one_localization_matches_closed_form(spec32, a, b):
    A = OperatorMatrix.rank_one(spec32, a, b)
    profile = localization_profile(A, RADII)
    assert_allclose(profile, rank_one_localization(a, b, RADII), atol=1e-6)


def test_identity_localization(spec64):
    identity = OperatorMatrix.identity(spec64)
    profile = localization_profile(identity, RADII)
    assert_allclose(profile, identity_localization(RADII), atol=1e-6)


def test_localization_of_parity_does_not_decay(spec64):
    profile = localization_profile(parity(spec64), RADII)
    assert_allclose(profile, 1.0, atol=1e-6)


def test_fixed_eigenspace_complement():
    split = fixed_eigenspace_complement([[-1.0, 1.0], [1.0, 1.0]])
    assert split.v0_factors == (0,)
    assert split.complement_factors == (1,)
    with pytest.raises(InvalidSpecError):
        fixed_eigenspace_complement([[[0, 1], [1, 0]]])
    with pytest.raises(InvalidSpecError):
        fixed_eigenspace_complement([[2.0, 1.0]])


def test_intersection_probe_compact_operator_decays():
    single = FockSpec(16)
    vacuum = OperatorMatrix.rank_one(single, 0, 0)
    A = tensor_product(vacuum, vacuum)
    report = intersection_probe(A, [-1.0, 1.0], w_points=3)
    assert report.scalars["decay_ratio"] < 1e-3
    assert report.passed


def test_compact_tensor_identity_decays_along_moved_factor():
    single = FockSpec(16)
    A = tensor_product(
        OperatorMatrix.rank_one(single, 0, 0), OperatorMatrix.identity(single)
    )
    radii = [0.0, 1.0, 2.0, 4.0]
    report = intersection_probe(A, np.diag([-1.0, 1.0]), radii=radii)
    assert report.scalars["split"]["v0_factors"] == [0]
    assert_allclose(
        report.arrays["envelope"],
        np.exp(-np.asarray(radii) ** 2 / 2.0),
        atol=1e-6,
    )
    assert report.scalars["flatness"] < 0.05
    assert report.passed


def test_intersection_probe_identity_control_does_not_decay():
    single = FockSpec(16)
    identity = OperatorMatrix.identity(single)
    A = tensor_product(identity, identity)
    report = intersection_probe(
        A, [-1.0, 1.0], radii=[0.0, 1.0, 2.0], w_points=3
    )
    assert report.scalars["decay_ratio"] > 0.99


def test_intersection_probe_needs_tensor_spec(spec16, vacuum16):
    with pytest.raises(InvalidSpecError):
        intersection_probe(vacuum16, [-1.0])
