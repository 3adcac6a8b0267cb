"""
fourier-roundtrip, fop-identity, twisted-conv, delta-parity,
parity-conjugation, ideal-suite and convention-audit.
"""

import numpy as np
from scipy import linalg

from quantum_harmonic.experiments.families import (
    ideal_members,
    operator_family,
    smooth_symbols,
)
from quantum_harmonic.experiments.registry import experiment
from quantum_harmonic.fock_core.operators import parity
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ExperimentConfig,
    ExperimentReport,
    FockSpec,
    Grid,
    GridSymbol,
    OperatorMatrix,
)
from quantum_harmonic.models.helper.enums import Experiment_Choices
from quantum_harmonic.phase_transforms.audit import (
    HAAR_TOL,
    convention_audit,
)
from quantum_harmonic.phase_transforms.checks import (
    ideal_membership_suite,
    parity_conjugation_check,
)
from quantum_harmonic.phase_transforms.fourier_weyl import (
    fourier_weyl,
    fourier_weyl_batch,
    inverse_fourier_weyl_batch,
)
from quantum_harmonic.phase_transforms.quantization import (
    delta_alignment,
    delta_quantization_constant,
    fit_operator_fourier,
    modulation_covariance_defect,
    operator_fourier,
    shift_covariance_defect,
    weyl_quantize,
)
from quantum_harmonic.phase_transforms.symplectic import symplectic_fourier
from quantum_harmonic.phase_transforms.twisted import (
    twisted_convolution,
    twisted_convolution_reference,
)
from quantum_harmonic.quantize.symbols import parse_symbol

logger = get_logger(__name__)

COVARIANCE_POINT = 0.5 + 0.25j
REFERENCE_POINTS = 32
DELTA_CONSTANT_TOL = 0.05
MONOTONE_SLACK = 1e-9


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    return float(
        np.linalg.norm(a - b) / max(np.linalg.norm(b), np.finfo(float).tiny)
    )


def _family_spec(config: ExperimentConfig) -> FockSpec:
    return FockSpec(config.family("operators")["dim"])


def _operators(config: ExperimentConfig, name, count=None):
    family = config.family("operators")
    return operator_family(
        config.rng(name),
        _family_spec(config),
        count or family["count"],
        family["rank"],
        family["support"],
    )


@experiment(Experiment_Choices.FOURIER_ROUNDTRIP)
def fourier_roundtrip(config: ExperimentConfig) -> ExperimentReport:
    """F_W^-1 F_W on the seeded operator family, with Plancherel."""
    spec = _family_spec(config)
    grid = config.grid
    conv = config.conventions
    operators = _operators(config, Experiment_Choices.FOURIER_ROUNDTRIP)
    analysed = fourier_weyl_batch(operators, grid)
    rebuilt = inverse_fourier_weyl_batch(analysed, spec, conv)

    errors = np.array(
        [_relative(B.entries, A.entries) for A, B in zip(operators, rebuilt)]
    )
    # int |F_W(A)|^2 = 2 pi ||A||_F^2, independent of the synthesis measure.
    plancherel = np.array(
        [
            abs(
                grid.cell_area * np.sum(np.abs(f.samples) ** 2)
                / (2 * np.pi * np.linalg.norm(A.entries) ** 2)
                - 1.0
            )
            for A, f in zip(operators, analysed)
        ]
    )
    report = ExperimentReport(str(Experiment_Choices.FOURIER_ROUNDTRIP))
    report.config = {"dim": spec.dim, "grid": grid.to_dict()}
    report.arrays["relative_errors"] = errors
    report.arrays["plancherel_defects"] = plancherel
    report.scalars["max_relative_error"] = float(errors.max())
    report.check(
        "roundtrip",
        float(errors.max()),
        config.tol("roundtrip"),
        note=conv.tag,
    )
    report.check(
        "plancherel",
        float(plancherel.max()),
        config.tol("roundtrip"),
        primary=False,
    )
    return report


@experiment(Experiment_Choices.FOP_IDENTITY)
def fop_identity(config: ExperimentConfig) -> ExperimentReport:
    """
    Fit F_op(A) by c D_t(A) U and check F_op(F_op(A)) = A.

    Under the audited preset the fit lands on c = 1, t = 1, i.e.
    F_op(A) = A U.
    """
    grid = config.grid
    conv = config.conventions
    tol = config.tol("fop")
    operators = _operators(config, Experiment_Choices.FOP_IDENTITY)

    rows = []
    for i, A in enumerate(operators):
        fit = fit_operator_fourier(A, grid, conv)
        once = operator_fourier(A, grid, conv)
        twice = operator_fourier(once, grid, conv)
        rows.append(
            {
                "operator": i,
                "scale_re": fit.scale.real,
                "scale_im": fit.scale.imag,
                "dilation": fit.dilation,
                "residual": fit.residual,
                "involution": _relative(twice.entries, A.entries),
            }
        )
    residual = max(row["residual"] for row in rows)
    involution = max(row["involution"] for row in rows)
    scales = np.array([row["scale_re"] + 1j * row["scale_im"] for row in rows])
    dilations = np.array([row["dilation"] for row in rows])

    report = ExperimentReport(str(Experiment_Choices.FOP_IDENTITY))
    report.config = {"count": len(operators), "grid": grid.to_dict()}
    report.rows["fits"] = rows
    report.scalars.update(
        {
            "fitted_scale": complex(np.mean(scales)),
            "fitted_dilation": float(np.mean(dilations)),
            "max_residual": residual,
            "max_involution_defect": involution,
        }
    )
    report.check("fit_residual", residual, tol, note=conv.tag)
    report.check("involution", involution, tol, note="F_op(F_op(A)) = A")
    report.check(
        "scale_is_one",
        float(np.max(np.abs(scales - 1.0))),
        tol,
        primary=False,
        note="F_op(A) = A U",
    )
    report.check(
        "dilation_is_one",
        float(np.max(np.abs(dilations - 1.0))),
        tol,
        primary=False,
    )

    A = operators[0]
    shift = shift_covariance_defect(A, COVARIANCE_POINT, grid, conv)
    modulation = modulation_covariance_defect(A, COVARIANCE_POINT, grid, conv)
    report.scalars["shift_covariance"] = shift
    report.scalars["modulation_covariance"] = modulation
    report.check("shift_covariance", shift, tol, primary=False)
    report.check("modulation_covariance", modulation, tol, primary=False)
    return report


@experiment(Experiment_Choices.TWISTED_CONV)
def twisted_conv(config: ExperimentConfig) -> ExperimentReport:
    """F_W(BA) against F_W(B) *_sigma F_W(A) on seeded pairs."""
    spec = _family_spec(config)
    grid = Grid(config.grid.extent, config.family("twisted_points"))
    conv = config.conventions
    pairs = config.family("twisted_pairs")
    operators = _operators(
        config, Experiment_Choices.TWISTED_CONV, count=2 * pairs
    )

    defects = []
    for A, B in zip(operators[::2], operators[1::2]):
        fa, fb, fba = fourier_weyl_batch([A, B, B @ A], grid)
        product = twisted_convolution(fb, fa, conv)
        defects.append(_relative(product.samples, fba.samples))
    defects = np.array(defects)

    report = ExperimentReport(str(Experiment_Choices.TWISTED_CONV))
    report.config = {"pairs": pairs, "grid": grid.to_dict()}
    report.arrays["relative_defects"] = defects
    report.check(
        "multiplicativity",
        float(defects.max()),
        config.tol("twisted"),
        note=conv.tag,
    )

    # P_0 P_0 = P_0 and F_W(P_0)(xi) = exp(-|xi|^2 / 4).
    vacuum = fourier_weyl(OperatorMatrix.rank_one(spec, 0, 0), grid, conv)
    squared = twisted_convolution(vacuum, vacuum, conv)
    oracle = np.exp(-np.abs(grid.points) ** 2 / 4.0)
    report.check(
        "vacuum_oracle",
        float(np.max(np.abs(squared.samples - oracle))),
        config.tol("twisted_oracle"),
    )

    small = Grid(config.grid.extent, REFERENCE_POINTS)
    fa, fb = fourier_weyl_batch(operators[:2], small)
    fast = twisted_convolution(fb, fa, conv)
    reference = twisted_convolution_reference(fb, fa, conv)
    report.check(
        "reference_agreement",
        _relative(fast.samples, reference.samples),
        config.tol("twisted_oracle"),
        primary=False,
        note=f"N={REFERENCE_POINTS}",
    )
    return report


@experiment(Experiment_Choices.DELTA_PARITY)
def delta_parity(config: ExperimentConfig) -> ExperimentReport:
    """op(delta_eps) lines up with U as eps shrinks."""
    spec = _family_spec(config)
    grid = config.grid
    conv = config.conventions
    block = max(1, int(grid.extent**2 / 16))
    expected = delta_quantization_constant(conv)

    rows = []
    for eps in config.family("delta_eps"):
        f = GridSymbol.sample(parse_symbol(f"delta:{eps}"), grid)
        mass = float(grid.cell_area * np.sum(f.samples).real)
        op = weyl_quantize(f, spec, conv, block=block)
        alignment, constant = delta_alignment(op, block)
        logger.debug("delta:%g alignment %.6f", eps, alignment)
        rows.append(
            {
                "eps": eps,
                "alignment": alignment,
                "constant_re": constant.real,
                "constant_im": constant.imag,
                "mass": mass,
                "constant_per_mass": abs(constant) / mass,
            }
        )
    alignments = np.array([row["alignment"] for row in rows])
    last = rows[-1]

    report = ExperimentReport(str(Experiment_Choices.DELTA_PARITY))
    report.config = {"block": block, "dim": spec.dim}
    report.rows["sweep"] = rows
    report.scalars.update(
        {
            "alignment": last["alignment"],
            "constant": last["constant_per_mass"],
            "expected_constant": expected,
        }
    )
    report.check(
        f"alignment_eps={last['eps']:g}",
        last["alignment"],
        config.tol("delta_alignment"),
        ">",
    )
    report.flag(
        "alignment_increases",
        bool(np.all(np.diff(alignments) >= -MONOTONE_SLACK)),
        note="eps decreasing",
    )
    report.check(
        "constant",
        abs(last["constant_per_mass"] / expected - 1.0),
        DELTA_CONSTANT_TOL,
        primary=False,
        note=f"op(delta_0) = {expected:.6g} U under {conv.tag}",
    )
    return report


@experiment(Experiment_Choices.PARITY_CONJUGATION)
def parity_conjugation(config: ExperimentConfig) -> ExperimentReport:
    spec = _family_spec(config)
    grid = config.grid
    conv = config.conventions
    symbols = smooth_symbols(
        config.rng(Experiment_Choices.PARITY_CONJUGATION),
        config.family("smooth_symbols"),
        config.family("symbol_degree"),
    )
    tol = config.tol("conjugation")
    report = ExperimentReport(str(Experiment_Choices.PARITY_CONJUGATION))
    report.config = {"symbols": [s.name for s in symbols], "dim": spec.dim}
    defects = []
    for symbol in symbols:
        part = parity_conjugation_check(
            GridSymbol.sample(symbol, grid), spec, conv, tol=tol
        )
        defects.append(part.scalars["defect"])
    defects = np.array(defects)
    report.arrays["defects"] = defects
    report.check("conjugation_defect", float(defects.max()), tol)
    return report


@experiment(Experiment_Choices.IDEAL_SUITE)
def ideal_suite(config: ExperimentConfig) -> ExperimentReport:
    """
    Ideal membership of op(f), op(F_sigma f) and op(beta_- f) for symbols
    f = F_sigma F_W(A) of operators with known ideal structure, so that
    op(f) = A.
    """
    spec = _family_spec(config)
    grid = config.grid
    conv = config.conventions
    members = ideal_members(
        config.rng(Experiment_Choices.IDEAL_SUITE),
        spec,
        config.family("operators")["support"],
    )
    report = ExperimentReport(str(Experiment_Choices.IDEAL_SUITE))
    report.config = {"members": [m[0] for m in members], "dim": spec.dim}
    U = parity(spec).entries
    for name, A, X, Y in members:
        f = symplectic_fourier(fourier_weyl(A, grid, conv), conv)
        part = ideal_membership_suite(
            f,
            X,
            spec,
            conv,
            Y,
            tol=config.tol("fop"),
            rank_tol=config.tol("rank"),
            membership_tol=config.tol("membership"),
        )
        report.merge(part, name)
        s_a = linalg.svdvals(A.entries)
        s_au = linalg.svdvals(A.entries @ U)
        report.check(
            f"{name}.singular_values_AU",
            float(np.max(np.abs(s_a - s_au))),
            config.tol("singular_values"),
        )
    return report


@experiment(Experiment_Choices.CONVENTION_AUDIT)
def convention_audit_run(config: ExperimentConfig) -> ExperimentReport:
    spec = FockSpec(config.family("audit_dim"))
    _, report = convention_audit(spec, config.grid, tol=config.tol("audit"))
    configured = config.conventions.haar_normalization
    measured = report.scalars["haar_normalization"]
    report.check(
        "configured_haar",
        abs(configured / measured - 1.0),
        HAAR_TOL,
        primary=False,
        note=f"configured c_H={configured:.6g}",
    )
    return report
