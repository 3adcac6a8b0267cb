"""even-odd, modulation-scan, localization-scan and intersection-probe."""

import numpy as np

from quantum_harmonic.experiments.families import random_interior_operator
from quantum_harmonic.experiments.registry import experiment
from quantum_harmonic.fock_core.operators import parity, tensor_product
from quantum_harmonic.fredholm.experiments import corollary_witness
from quantum_harmonic.models import (
    ExperimentConfig,
    ExperimentReport,
    FockSpec,
    OperatorMatrix,
)
from quantum_harmonic.models.helper.enums import (
    Continuity_Mode_Choices,
    Experiment_Choices,
)
from quantum_harmonic.parity.continuity import (
    DEFAULT_RADII,
    c_minus_one_witness,
    continuity_modulus,
    module_witness,
    theta_rotation_witness,
    theta_shift_bound_check,
)
from quantum_harmonic.parity.even_odd import (
    assemble_blocks,
    block_decompose,
    conjugate_by_parity,
    even_odd_split,
    make_even_with_index,
    symmetry_class,
    symmetry_defects,
)
from quantum_harmonic.parity.intersection import intersection_probe
from quantum_harmonic.parity.localization import (
    identity_localization,
    localization_profile,
    rank_one_localization,
)
from quantum_harmonic.quantize.symbols import parse_symbol
from quantum_harmonic.quantize.toeplitz import toeplitz

MONOTONE_SLACK = 1e-12
WITNESS_TOL = 1e-10


def _relative(a: np.ndarray, b: np.ndarray) -> float:
    return float(
        np.linalg.norm(a - b) / max(np.linalg.norm(b), np.finfo(float).tiny)
    )


@experiment(Experiment_Choices.EVEN_ODD)
def even_odd(config: ExperimentConfig) -> ExperimentReport:
    spec = config.spec.factors[0]
    rng = config.rng(Experiment_Choices.EVEN_ODD)
    members = [
        ("random", random_interior_operator(rng, spec, 4, spec.dim), None),
        ("T[winding:1]", toeplitz(parse_symbol("winding:1"), spec), 1),
        ("T[winding:2]", toeplitz(parse_symbol("winding:2"), spec), 0),
        ("make_even:2", make_even_with_index(2, spec), 0),
    ]
    tol = config.tol("even_odd")
    report = ExperimentReport(str(Experiment_Choices.EVEN_ODD))
    report.config = {"dim": spec.dim}
    rows = []
    for name, A, expected in members:
        split = even_odd_split(A)
        even_defect = _relative(
            conjugate_by_parity(split.even_part), split.even_part.entries
        )
        odd_defect = _relative(
            -conjugate_by_parity(split.odd_part), split.odd_part.entries
        )
        rebuilt = assemble_blocks(block_decompose(A), spec)
        found = symmetry_class(A, -1.0, 2)
        rows.append(
            {
                "member": name,
                "class": found,
                "residual": split.residual,
                "even_defect": even_defect,
                "odd_defect": odd_defect,
                "defects_k3": symmetry_defects(
                    A, np.exp(2j * np.pi / 3), 3
                ).tolist(),
            }
        )
        report.check(f"{name}.split_residual", split.residual, tol, "<=")
        report.check(f"{name}.even_commutes", even_defect, tol, "<=")
        report.check(f"{name}.odd_anticommutes", odd_defect, tol, "<=")
        report.check(
            f"{name}.blocks_roundtrip",
            float(np.max(np.abs(rebuilt.entries - A.entries))),
            0.0,
            "<=",
        )
        report.check(f"{name}.class", found, expected, "==")
    report.rows["members"] = rows

    # A T_(z/|z|) for the odd shift T_(z/|z|): even, index one lower.
    report.merge(corollary_witness(members[1][1]), "corollary")
    return report


@experiment(Experiment_Choices.MODULATION_SCAN)
def modulation_scan(config: ExperimentConfig) -> ExperimentReport:
    """
    The parity operator lies in C_-1 but not in C_1: its modulation
    modulus vanishes while its shift modulus does not.
    """
    spec = FockSpec(config.family("modulation_dim"))
    radii = DEFAULT_RADII
    U = parity(spec)
    _, modulation, _ = c_minus_one_witness(OperatorMatrix.identity(spec))
    shift = continuity_modulus(U, Continuity_Mode_Choices.SHIFT, radii=radii)

    report = ExperimentReport(str(Experiment_Choices.MODULATION_SCAN))
    report.config = {"dim": spec.dim, "radii": radii}
    report.arrays["radii"] = radii
    report.arrays["modulation_U"] = modulation.moduli
    report.arrays["shift_U"] = shift.moduli
    report.arrays["truncation_error"] = shift.truncation_errors
    worst_modulation = float(modulation.moduli.max())
    shift_at_one = float(shift.moduli[-1])
    contrast = shift_at_one / max(worst_modulation, np.finfo(float).tiny)
    report.scalars.update(
        {
            "max_modulation": worst_modulation,
            "shift_at_unit_radius": shift_at_one,
            "contrast": contrast,
        }
    )
    report.check(
        "modulation_vanishes", worst_modulation, config.tol("modulation")
    )
    report.check(
        "shift_persists", shift_at_one, config.tol("shift_floor"), ">"
    )
    report.check("contrast", contrast, config.tol("contrast"), ">")

    # C_-1 = U C_1 and C_Theta = U_Theta C_1 on a non-invariant operator.
    A = OperatorMatrix.rank_one(spec, 0, 0) + OperatorMatrix.rank_one(
        spec, 1, 0
    ) * 0.5
    gap, _, _ = c_minus_one_witness(A)
    theta_gap, _, _ = theta_rotation_witness(A, 1j)
    report.scalars["c_minus_one_gap"] = gap
    report.scalars["theta_gap"] = theta_gap
    report.check("c_minus_one_equals_U_c_one", gap, WITNESS_TOL, primary=False)
    report.check("theta_class_rotation", theta_gap, WITNESS_TOL, primary=False)
    lhs, rhs = theta_shift_bound_check(A, 1j, 0.5 + 0.25j, -0.3 + 0.4j)
    report.check(
        "theta_shift_bound", lhs - rhs, WITNESS_TOL, "<=", primary=False
    )
    report.merge(module_witness(A, U), "module")
    report.warnings.extend(modulation.warnings)
    return report


@experiment(Experiment_Choices.LOCALIZATION_SCAN)
def localization_scan(config: ExperimentConfig) -> ExperimentReport:
    spec = config.spec.factors[0]
    radii = np.linspace(
        0.0,
        config.family("localization_radius"),
        config.family("localization_points"),
    )
    members = [
        ("e0(x)e0", OperatorMatrix.rank_one(spec, 0, 0), (0, 0)),
        ("e1(x)e0", OperatorMatrix.rank_one(spec, 1, 0), (1, 0)),
        ("e0(x)e1", OperatorMatrix.rank_one(spec, 0, 1), (0, 1)),
    ]
    tol = config.tol("localization")
    report = ExperimentReport(str(Experiment_Choices.LOCALIZATION_SCAN))
    report.config = {"dim": spec.dim}
    report.arrays["radii"] = radii
    beyond = radii >= 1.0
    for name, A, (a, b) in members:
        profile = localization_profile(A, radii)
        oracle = rank_one_localization(a, b, radii)
        report.arrays[name] = profile
        report.check(
            f"{name}.oracle", float(np.max(np.abs(profile - oracle))), tol
        )
        report.flag(
            f"{name}.decreasing_beyond_1",
            bool(np.all(np.diff(profile[beyond]) <= MONOTONE_SLACK)),
        )
    identity = localization_profile(OperatorMatrix.identity(spec), radii)
    report.arrays["identity"] = identity
    report.check(
        "identity.oracle",
        float(np.max(np.abs(identity - identity_localization(radii)))),
        tol,
    )
    return report


def _split_operator(thetas, dim: int, control: bool) -> OperatorMatrix:
    """Vacuum projector on moved factors and identity on fixed ones."""
    factor = FockSpec(dim)
    parts = []
    for theta in thetas:
        if control or np.isclose(theta, 1.0):
            parts.append(OperatorMatrix.identity(factor))
        else:
            parts.append(OperatorMatrix.rank_one(factor, 0, 0))
    return tensor_product(*parts)


@experiment(Experiment_Choices.INTERSECTION_PROBE)
def intersection_probe_run(config: ExperimentConfig) -> ExperimentReport:
    dim = config.family("intersection_dim")
    turns = np.asarray(config.family("intersection_turns"))
    thetas = np.exp(2j * np.pi * turns)
    flat_tol = config.tol("flatness")
    radii = np.linspace(0.0, 4.0, 9)

    compact = intersection_probe(
        _split_operator(thetas, dim, False), thetas, radii, flat_tol=flat_tol
    )
    report = ExperimentReport(str(Experiment_Choices.INTERSECTION_PROBE))
    report.config = {"factor_dim": dim, "theta": thetas}
    report.merge(compact, "compact")
    report.check(
        "compact.decay_ratio",
        compact.scalars["decay_ratio"],
        config.tol("decay"),
    )
    envelope = compact.arrays["envelope"]
    report.check(
        "compact.envelope_oracle",
        float(np.max(np.abs(envelope - np.exp(-(radii**2) / 2.0)))),
        config.tol("localization"),
        primary=False,
        note="exp(-|v|^2/2), the vacuum projector (x) identity",
    )

    control = intersection_probe(
        _split_operator(thetas, dim, True), thetas, radii, flat_tol=flat_tol
    )
    report.merge(control, "control")
    report.check(
        "control.constant",
        abs(1.0 - control.scalars["decay_ratio"]),
        flat_tol,
    )
    return report
