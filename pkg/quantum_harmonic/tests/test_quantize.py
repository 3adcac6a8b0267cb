import numpy as np
import pytest
from numpy.testing import assert_allclose

from quantum_harmonic.errors import (
    InvalidSpecError,
    TruncationError,
    UnknownSymbolError,
)
from quantum_harmonic.models import FockSpec, OperatorMatrix
from quantum_harmonic.quantize import (
    SYMBOLS,
    berezin,
    berezin_grid,
    berezin_with_tail,
    parse_symbol,
    radial_scheme,
    symbol_reflect,
    toeplitz,
    toeplitz_quadrature,
)
from quantum_harmonic.quantize.oracles import (
    gaussian_convolution,
    heat_smoothed,
    weighted_shift_weight_by_integration,
    weighted_shift_weights,
)

HEAT_POINTS = [0.0, 0.5, 1.0 + 0.5j, -1.5j, 2.0]


def test_weighted_shift_first_weight():
    assert_allclose(weighted_shift_weights(1)[0], np.sqrt(np.pi) / 2.0)


@pytest.mark.parametrize("m", [0, 1, 5, 20])
def test_weighted_shift_integration_matches_closed_form(m):
    closed = weighted_shift_weights(m + 1)[m]
    integrated = weighted_shift_weight_by_integration(m)
    assert_allclose(integrated, closed, atol=1e-10)


def test_weighted_shift_weights_approach_one():
    weights = weighted_shift_weights(400)
    assert np.all(np.diff(weights) > 0)
    assert abs(weights[-1] - 1.0) < 1e-3


def test_toeplitz_of_unit_phase_is_weighted_shift():
    spec = FockSpec(48)
    T = toeplitz(parse_symbol("winding:1"), spec)
    alphas = np.diag(T.entries, k=-1)
    assert_allclose(alphas, weighted_shift_weights(47), atol=1e-8)
    off_shift = T.entries.copy()
    off_shift[np.arange(1, 48), np.arange(47)] = 0.0
    assert np.max(np.abs(off_shift)) < 1e-10


def test_toeplitz_of_constant_is_identity(spec32):
    T = toeplitz(parse_symbol("constant:2"), spec32)
    assert_allclose(T.entries, 2.0 * np.eye(32), atol=1e-10)


def test_toeplitz_of_conjugate_symbol_is_adjoint(spec32):
    forward = toeplitz(parse_symbol("winding:1"), spec32)
    backward = toeplitz(parse_symbol("winding:-1"), spec32)
    assert_allclose(backward.entries, forward.adjoint().entries, atol=1e-12)


def test_toeplitz_non_separable_symbol_is_hermitian_for_real_symbol(spec16):
    T = toeplitz(parse_symbol("shifted_gaussian:1:0.5"), spec16)
    assert_allclose(T.entries, T.adjoint().entries, atol=1e-10)


def test_toeplitz_quadrature_reports_accuracy(spec32):
    _, scheme = toeplitz_quadrature(parse_symbol("gaussian:0.5"), spec32)
    assert scheme.accuracy < 1e-9
    assert radial_scheme(32).radial_count >= 32


def test_toeplitz_rejects_tensor_spec():
    with pytest.raises(InvalidSpecError):
        toeplitz(parse_symbol("constant"), FockSpec.product(4, 4))


@pytest.mark.parametrize("z", HEAT_POINTS)
def test_berezin_of_gaussian_toeplitz_is_heat_smoothing(spec64, z):
    T = toeplitz(parse_symbol("gaussian:0.5"), spec64)
    assert_allclose(berezin(T, z), gaussian_convolution(0.5, z), atol=1e-8)


def test_heat_quadrature_agrees_with_closed_form():
    f = parse_symbol("gaussian:0.5")
    for z in HEAT_POINTS:
        assert_allclose(
            heat_smoothed(f, z), gaussian_convolution(0.5, z), atol=1e-10
        )


@pytest.mark.parametrize("z", HEAT_POINTS)
def test_berezin_of_odd_toeplitz_is_heat_smoothing(spec64, z):
    f = parse_symbol("odd_gaussian")
    T = toeplitz(f, spec64)
    assert_allclose(berezin(T, z), heat_smoothed(f, z), atol=1e-7)


def test_berezin_of_identity_is_one(spec32):
    identity = OperatorMatrix.identity(spec32)
    values = berezin_grid(identity, [0.0, 1.0, 2.0], [0.0, np.pi / 3])
    assert values.shape == (3, 2)
    assert_allclose(values, 1.0, atol=1e-10)


def test_berezin_is_bounded_by_operator_norm(spec32, rng):
    entries = rng.standard_normal((32, 32)) + 1j * rng.standard_normal(
        (32, 32)
    )
    A = OperatorMatrix(entries, spec32)
    for z in HEAT_POINTS:
        assert abs(berezin(A, z)) <= A.op_norm() + 1e-12


def test_berezin_refuses_large_tail(spec16):
    identity = OperatorMatrix.identity(spec16)
    with pytest.raises(TruncationError):
        berezin(identity, 10.0)
    value, tail = berezin_with_tail(identity, 10.0, strict=False)
    assert tail > 0.5
    assert_allclose(value, 1.0 - tail, atol=1e-12)


def test_parse_symbol_errors():
    with pytest.raises(UnknownSymbolError):
        parse_symbol("not-a-symbol")
    with pytest.raises(UnknownSymbolError):
        parse_symbol("delta:-1")
    assert "winding" in SYMBOLS


def test_symbol_reflect():
    f = parse_symbol("odd_gaussian")
    z = np.array([0.3 + 0.2j, -1.0, 2.0j])
    assert_allclose(symbol_reflect(f)(z), -f(z))
    g = parse_symbol("winding:2")
    assert_allclose(symbol_reflect(g)(z), g(z))


def test_toeplitz_is_linear_in_the_symbol(spec32):
    f = parse_symbol("winding:1")
    g = parse_symbol("radial_gaussian_winding:1:0.5")
    combined = toeplitz(f.combine(2.0, g, -1j), spec32)
    expected = 2.0 * toeplitz(f, spec32).entries - 1j * toeplitz(
        g, spec32
    ).entries
    assert_allclose(combined.entries, expected, atol=1e-10)


def test_toeplitz_of_conjugated_symbol_is_adjoint(spec16):
    f = parse_symbol("shifted_gaussian:1:0:0.5").combine(
        1.0, parse_symbol("winding:1"), 0.5j
    )
    conjugated = toeplitz(f.conjugate(), spec16)
    assert_allclose(
        conjugated.entries, toeplitz(f, spec16).adjoint().entries, atol=1e-9
    )
