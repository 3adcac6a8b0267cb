import numpy as np
import pytest
from numpy.testing import assert_allclose

from quantum_harmonic.errors import DimensionOverflowError, InvalidSpecError
from quantum_harmonic.fock_core import (
    ccr_defect,
    ccr_phase,
    coherent_state,
    coherent_tail,
    kernel_overlap,
    linalg_utilities,
    modulate_gamma,
    monomial_norm,
    parity,
    parity_rotation,
    rotation_intertwining_defect,
    shift_alpha,
    tensor_product,
    weyl_compression,
    weyl_operator,
    weyl_truncation_error,
)
from quantum_harmonic.models import FockSpec, OperatorMatrix, PhasePoint

POINTS = [0.3 + 0.4j, -0.5 + 0.2j, 1.1j, -0.7]


def test_fock_spec_rejects_bad_dimensions():
    with pytest.raises(InvalidSpecError):
        FockSpec(1)
    with pytest.raises(InvalidSpecError):
        FockSpec(8, n=2)


def test_product_spec_degrees():
    spec = FockSpec.product(3, 2)
    assert spec.dim == 6
    assert spec.is_tensor
    assert_allclose(spec.degrees, [0, 1, 1, 2, 2, 3])
    assert_allclose(
        spec.factor_degrees, [[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]]
    )


def test_product_spec_orders_by_total_degree():
    spec = FockSpec.product(3, 3)
    assert_allclose(spec.degrees, [0, 1, 1, 2, 2, 2, 3, 3, 4])
    assert np.all(np.diff(spec.degrees) >= 0)
    assert_allclose(spec.factor_degrees[3:6], [[0, 2], [1, 1], [2, 0]])
    kron = np.arange(9.0)
    assert_allclose(spec.from_kron(kron), [0, 1, 3, 2, 4, 6, 5, 7, 8])
    assert FockSpec.product([3, 3]) == spec


def test_monomial_norm():
    assert_allclose(monomial_norm(0), 1.0)
    assert_allclose(monomial_norm(3), np.sqrt(48.0))
    with pytest.raises(InvalidSpecError):
        monomial_norm(-1)


def test_sigma_is_antisymmetric():
    z, w = PhasePoint.of(0.3 + 0.4j), PhasePoint.of(-0.5 + 0.2j)
    assert_allclose(z.sigma(w), -w.sigma(z))
    assert_allclose(z.sigma(w), np.imag((0.3 + 0.4j) * np.conj(-0.5 + 0.2j)))


@pytest.mark.parametrize("z", POINTS)
@pytest.mark.parametrize("w", POINTS[:2])
def test_ccr_holds_on_interior_block(spec64, z, w):
    assert ccr_defect(z, w, spec64, block=32) < 1e-8


def test_ccr_phase_is_unimodular():
    assert_allclose(abs(ccr_phase(0.3 + 0.4j, 1.0 - 2.0j)), 1.0)
    assert_allclose(ccr_phase(1.0, 2.0), 1.0)


@pytest.mark.parametrize("dim", [16, 32])
@pytest.mark.parametrize("z", POINTS)
def test_parity_intertwines_weyl(dim, z):
    spec = FockSpec(dim)
    U = parity(spec).entries
    left = weyl_operator(z, spec).entries @ U
    right = U @ weyl_operator(-z, spec).entries
    assert np.linalg.norm(left - right, 2) < 1e-12


def test_parity_is_involutive_and_unitary(spec16):
    U = parity(spec16)
    assert_allclose((U @ U).entries, np.eye(16))
    assert_allclose(U.adjoint().entries, U.entries)
    assert_allclose(parity_rotation(-1.0, spec16).entries, U.entries)


@pytest.mark.parametrize("z", POINTS)
def test_weyl_maps_vacuum_to_coherent_state(spec32, z):
    column = weyl_compression(z, spec32).entries[:, 0]
    assert_allclose(column, coherent_state(z, spec32).coeffs, atol=1e-12)


@pytest.mark.parametrize("z", POINTS)
def test_exponential_weyl_matches_compression_near_origin(spec64, z):
    assert weyl_truncation_error(z, spec64) < 1e-10


def test_kernel_overlap_matches_truncated_inner_product(spec64):
    for z in POINTS:
        for w in POINTS:
            state = coherent_state(z, spec64)
            overlap = state.inner(coherent_state(w, spec64))
            assert_allclose(overlap, kernel_overlap(z, w), atol=1e-12)


def test_coherent_tail(spec16):
    assert coherent_tail(0.0, spec16) == 0.0
    state = coherent_state(2.0 + 1.0j, spec16, warn=False)
    assert_allclose(state.tail, 1.0 - state.norm() ** 2, atol=1e-12)
    assert coherent_tail(8.0, spec16) > 0.5


@pytest.mark.parametrize("theta", [1j, np.exp(2j * np.pi / 3), -1.0])
def test_rotation_intertwining(spec32, theta):
    assert rotation_intertwining_defect(theta, 0.6 - 0.3j, spec32) < 1e-12


def test_shift_and_modulation_of_identity(spec32):
    identity = OperatorMatrix.identity(spec32)
    shifted = shift_alpha(identity, 0.5j)
    assert_allclose(shifted.entries, np.eye(32), atol=1e-12)
    # gamma_z(I) = W_(z/2)^2 = W_z
    assert_allclose(
        modulate_gamma(identity, 0.5j).entries,
        weyl_operator(0.5j, spec32).entries,
        atol=1e-12,
    )


def test_tensor_product_respects_cap(spec16, spec32):
    A = OperatorMatrix.rank_one(spec16, 0, 1)
    product = tensor_product(A, A)
    assert product.spec.factors == (FockSpec(16), FockSpec(16))
    assert_allclose(
        product.entries, product.spec.from_kron(np.kron(A.entries, A.entries))
    )
    # e_1 (x) e_1 sits in the middle of the degree-two block.
    assert_allclose(product.entries[0, 4], 1.0)
    assert np.count_nonzero(product.entries) == 1
    with pytest.raises(DimensionOverflowError):
        tensor_product(
            OperatorMatrix.identity(spec32), OperatorMatrix.identity(spec32)
        )


def test_tensor_weyl_factorizes():
    spec = FockSpec.product(8, 8)
    z = (0.3 + 0.1j, -0.2j)
    single = FockSpec(8)
    expected = np.kron(
        weyl_operator(z[0], single).entries,
        weyl_operator(z[1], single).entries,
    )
    assert_allclose(
        weyl_operator(z, spec).entries, spec.from_kron(expected), atol=1e-14
    )
    with pytest.raises(InvalidSpecError):
        weyl_operator(0.5, spec)


def test_linalg_utilities(spec16):
    A = OperatorMatrix.rank_one(spec16, 2, 1) * 3.0
    summary = linalg_utilities(A)
    assert summary.numerical_rank == 1
    assert_allclose(summary.operator_norm, 3.0)
    assert_allclose(summary.adjoint.entries[1, 2], 3.0)
    assert summary.trace == 0


def test_operator_matrix_is_read_only(spec16):
    A = OperatorMatrix.identity(spec16)
    with pytest.raises(ValueError):
        A.entries[0, 0] = 2.0


def test_operator_matrix_dump_and_load(tmp_path, spec16, rng):
    entries = rng.standard_normal((16, 16)) + 1j * rng.standard_normal(
        (16, 16)
    )
    A = OperatorMatrix(entries, spec16, "audited")
    path = A.dump(tmp_path / "A.npz")
    loaded = OperatorMatrix.load(path)
    assert loaded.spec == spec16
    assert loaded.convention == "audited"
    assert_allclose(loaded.entries, entries)
    bare = A.dump(tmp_path / "B")
    assert bare == tmp_path / "B.npz"
    assert_allclose(OperatorMatrix.load(tmp_path / "B").entries, entries)
