import numpy as np
import pytest
from numpy.testing import assert_allclose

from quantum_harmonic.errors import ConventionError, InvalidSpecError
from quantum_harmonic.fock_core import parity
from quantum_harmonic.models import (
    ConventionParams,
    FockSpec,
    Grid,
    GridSymbol,
    OperatorMatrix,
)
from quantum_harmonic.phase_transforms import (
    convention_audit,
    delta_alignment,
    dilation,
    fit_operator_fourier,
    fourier_weyl,
    ideal_membership_suite,
    inverse_fourier_weyl,
    operator_fourier,
    parity_conjugation_check,
    regularized_fourier_weyl,
    regularized_trace,
    symplectic_fourier,
    twisted_convolution,
    twisted_convolution_reference,
    weyl_quantize,
)
from quantum_harmonic.phase_transforms.audit import measure_haar_normalization
from quantum_harmonic.phase_transforms.quantization import (
    delta_quantization_constant,
)
from quantum_harmonic.phase_transforms.symplectic import (
    gaussian_fourier,
    involution_defect,
)
from quantum_harmonic.quantize import parse_symbol


def _relative(a, b):
    return np.linalg.norm(a - b) / np.linalg.norm(b)


def _mixed(spec):
    return OperatorMatrix.rank_one(spec, 0, 0) + OperatorMatrix.rank_one(
        spec, 1, 0
    ) * 0.5


def _random(spec, rng, support=3):
    entries = np.zeros((spec.dim, spec.dim), dtype=complex)
    entries[:support, :support] = rng.standard_normal(
        (support, support)
    ) + 1j * rng.standard_normal((support, support))
    return OperatorMatrix(entries, spec)


def test_grid_requires_power_of_two():
    with pytest.raises(InvalidSpecError):
        Grid(10.0, 100)
    with pytest.raises(InvalidSpecError):
        Grid(-1.0, 64)
    assert_allclose(Grid(10.0, 64).spacing, 20.0 / 64)


def test_convention_presets():
    audited = ConventionParams.audited()
    assert audited.involutive
    assert_allclose(audited.haar_normalization, 1.0 / (2 * np.pi))
    assert ConventionParams.preset("half-phase").fourier_phase_scale == 0.5
    assert ConventionParams.unit_phase().involutive
    with pytest.raises(InvalidSpecError):
        ConventionParams.preset("nope")


def test_fourier_weyl_of_vacuum_is_gaussian(grid, vacuum16):
    analysed = fourier_weyl(vacuum16, grid)
    expected = np.exp(-np.abs(grid.points) ** 2 / 4.0)
    assert_allclose(analysed.samples, expected, atol=1e-12)


def test_fourier_weyl_plancherel(grid, spec16, rng):
    A = _random(spec16, rng)
    analysed = fourier_weyl(A, grid)
    energy = grid.cell_area * np.sum(np.abs(analysed.samples) ** 2)
    assert_allclose(energy, 2 * np.pi * A.frobenius_norm() ** 2, rtol=1e-6)


def test_fourier_weyl_rejects_tensor_spec(grid):
    spec = FockSpec.product(4, 4)
    with pytest.raises(InvalidSpecError):
        fourier_weyl(OperatorMatrix.identity(spec), grid)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_fourier_weyl_roundtrip(grid, spec16, seed):
    A = _random(spec16, np.random.default_rng(seed))
    rebuilt = inverse_fourier_weyl(fourier_weyl(A, grid), spec16)
    assert _relative(rebuilt.entries, A.entries) < 1e-4


def test_measured_haar_normalization(grid, spec16):
    haar = measure_haar_normalization(spec16, grid)
    assert_allclose(haar, 1.0 / (2 * np.pi), rtol=1e-6)


def test_dilation_by_one_is_identity(grid, spec16):
    A = _mixed(spec16)
    assert _relative(dilation(A, 1.0, grid).entries, A.entries) < 1e-4
    with pytest.raises(InvalidSpecError):
        dilation(A, 0.0, grid)


@pytest.mark.parametrize("preset", ["audited", "unit-phase"])
def test_symplectic_fourier_of_self_dual_gaussian(grid, preset):
    conv = ConventionParams.preset(preset)
    a = abs(conv.fourier_phase_scale) / 2.0
    f = GridSymbol.sample(lambda z: np.exp(-a * np.abs(z) ** 2), grid)
    transformed = symplectic_fourier(f, conv)
    assert_allclose(
        transformed.samples,
        gaussian_fourier(a, grid.points, conv),
        atol=1e-9,
    )
    assert involution_defect(f, conv) < 1e-9


@pytest.mark.parametrize("filename", ["fw.npz", "fw.dat", "fw"])
def test_grid_symbol_dump_and_load(tmp_path, grid, vacuum16, filename):
    conv = ConventionParams.audited()
    analysed = fourier_weyl(vacuum16, grid, conv)
    assert analysed.convention == conv.tag
    path = analysed.dump(tmp_path / filename)
    assert path.exists()
    assert path.suffix == ".npz"
    loaded = GridSymbol.load(tmp_path / filename)
    assert loaded.grid == grid
    assert loaded.convention == conv.tag
    assert loaded.name == analysed.name
    assert loaded.provenance == analysed.provenance
    assert_allclose(loaded.samples, analysed.samples)


def test_fourier_weyl_of_parity_is_regularized_half():
    U = parity(FockSpec(128))
    values = regularized_fourier_weyl(U, [0.0, 0.5, 1.0 + 0.5j])
    assert_allclose(values, 0.5, atol=1e-3)


def test_regularized_trace_of_trace_class_operator():
    spec = FockSpec(64)
    A = OperatorMatrix(np.diag(0.5 ** np.arange(64)), spec)
    assert_allclose(regularized_trace(A), A.trace(), rtol=1e-4)
    with pytest.raises(InvalidSpecError):
        regularized_trace(A, damping=1.5)


def test_operator_fourier_is_right_multiplication_by_parity(grid, spec16):
    A = _mixed(spec16)
    U = parity(spec16).entries
    audited = operator_fourier(A, grid, block=8).entries[:8, :8]
    assert _relative(audited, (A.entries @ U)[:8, :8]) < 1e-3
    half = ConventionParams.half_phase()
    flipped = operator_fourier(A, grid, half, block=8).entries[:8, :8]
    assert _relative(flipped, (U @ A.entries)[:8, :8]) < 1e-3


def test_fit_operator_fourier(grid, spec16):
    fit = fit_operator_fourier(_mixed(spec16), grid)
    assert abs(fit.scale - 1.0) < 1e-3
    assert abs(fit.dilation - 1.0) < 1e-3
    assert fit.residual < 1e-3


def test_twisted_convolution_matches_reference(spec16):
    grid = Grid(10.0, 32)
    f = fourier_weyl(_mixed(spec16), grid)
    g = fourier_weyl(OperatorMatrix.rank_one(spec16, 0, 1), grid)
    fast = twisted_convolution(f, g)
    slow = twisted_convolution_reference(f, g)
    assert _relative(fast.samples, slow.samples) < 1e-10
    wide = fourier_weyl(_mixed(spec16), Grid(10.0, 128))
    with pytest.raises(InvalidSpecError):
        twisted_convolution_reference(wide, wide)


def test_twisted_convolution_of_vacuum(small_grid, vacuum16):
    analysed = fourier_weyl(vacuum16, small_grid)
    product = twisted_convolution(analysed, analysed)
    assert_allclose(product.samples, analysed.samples, atol=1e-6)


def test_twisted_convolution_is_multiplicative(small_grid, spec16):
    A = _mixed(spec16)
    B = OperatorMatrix.rank_one(spec16, 0, 1) + OperatorMatrix.rank_one(
        spec16, 1, 1
    )
    product = twisted_convolution(
        fourier_weyl(B, small_grid), fourier_weyl(A, small_grid)
    )
    expected = fourier_weyl(B @ A, small_grid)
    assert _relative(product.samples, expected.samples) < 1e-3


def test_twisted_convolution_needs_matching_grids(small_grid, grid, vacuum16):
    with pytest.raises(InvalidSpecError):
        twisted_convolution(
            fourier_weyl(vacuum16, small_grid), fourier_weyl(vacuum16, grid)
        )


def test_delta_quantization_is_proportional_to_parity(grid, spec16):
    f = GridSymbol.sample(parse_symbol("delta:0.1"), grid)
    op = weyl_quantize(f, spec16, block=4)
    alignment, constant = delta_alignment(op, 4)
    assert alignment > 0.99
    expected = delta_quantization_constant(ConventionParams.audited())
    assert_allclose(expected, 1.0 / (2 * np.pi))
    assert abs(constant.real / expected - 1.0) < 0.05


def test_parity_conjugation(grid, spec16):
    f = GridSymbol.sample(parse_symbol("random_smooth:1:2"), grid)
    report = parity_conjugation_check(f, spec16, block=8)
    assert report.passed
    assert report.scalars["defect"] < 1e-3


def test_ideal_membership_of_vacuum(grid, spec16, vacuum16):
    f = symplectic_fourier(fourier_weyl(vacuum16, grid))
    assert _relative(
        weyl_quantize(f, spec16, block=4).entries, vacuum16.entries
    ) < 1e-4
    report = ideal_membership_suite(f, [1, 2], spec16, block=8)
    assert report.passed, report.failed_verdicts()
    assert report.scalars["ranks"] == [1, 1, 1]


@pytest.mark.slow
def test_convention_audit_selects_audited_preset(grid, spec16):
    chosen, report = convention_audit(spec16, grid)
    assert chosen.name == "audited"
    assert report.passed
    assert report.conventions["half-phase"]["fop_is_AU"] is False


@pytest.mark.slow
def test_convention_audit_strict_without_consistent_preset():
    with pytest.raises(ConventionError):
        convention_audit(
            FockSpec(8), Grid(10.0, 64), tol=1e-15, strict=True
        )
