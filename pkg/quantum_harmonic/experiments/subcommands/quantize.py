"""toeplitz-shift: T_(z/|z|) as a weighted shift."""

import numpy as np

from quantum_harmonic.experiments.registry import experiment
from quantum_harmonic.models import (
    ExperimentConfig,
    ExperimentReport,
    FockSpec,
)
from quantum_harmonic.models.helper.enums import Experiment_Choices
from quantum_harmonic.quantize.berezin import berezin
from quantum_harmonic.quantize.oracles import (
    gaussian_convolution,
    heat_smoothed,
    weighted_shift_weight_by_integration,
    weighted_shift_weights,
)
from quantum_harmonic.quantize.symbols import parse_symbol
from quantum_harmonic.quantize.toeplitz import toeplitz_quadrature

HEAT_POINTS = (0.0, 0.5, 1.0 + 0.5j, -1.5j, 2.0)


@experiment(Experiment_Choices.TOEPLITZ_SHIFT)
def toeplitz_shift(config: ExperimentConfig) -> ExperimentReport:
    count = config.family("shift_count")
    dim = max(config.spec.factors[0].dim, count + 8)
    spec = FockSpec(dim)
    T, scheme = toeplitz_quadrature(parse_symbol("winding:1"), spec)

    alphas = np.diag(T.entries, k=-1)[:count]
    closed = weighted_shift_weights(count)
    integrated = np.array(
        [weighted_shift_weight_by_integration(m) for m in range(count)]
    )
    off_shift = T.entries.copy()
    off_shift[np.arange(1, dim), np.arange(dim - 1)] = 0.0

    report = ExperimentReport(str(Experiment_Choices.TOEPLITZ_SHIFT))
    report.config = {"dim": dim, "count": count, "scheme": scheme.to_dict()}
    report.rows["weights"] = [
        {
            "m": m,
            "quadrature": alphas[m].real,
            "closed_form": closed[m],
            "integrated": integrated[m],
        }
        for m in range(count)
    ]
    tol = config.tol("shift")
    report.check(
        "quadrature_vs_closed_form",
        float(np.max(np.abs(alphas - closed))),
        tol,
    )
    report.check(
        "integral_vs_closed_form",
        float(np.max(np.abs(integrated - closed))),
        tol,
    )
    report.check(
        "alpha_0",
        abs(alphas[0] - np.sqrt(np.pi) / 2.0),
        config.tol("shift_alpha0"),
        note="sqrt(pi)/2",
    )
    report.check(
        "off_shift_entries",
        float(np.max(np.abs(off_shift))),
        config.tol("off_shift"),
    )
    report.check(
        f"alpha_{count - 1}_near_one",
        abs(alphas[-1] - 1.0),
        config.tol("shift_limit"),
    )

    # The Berezin transform of T_f is f smoothed by the heat kernel.
    gaussian = parse_symbol("gaussian:0.5")
    heat_operator, _ = toeplitz_quadrature(gaussian, spec)
    heat = max(
        abs(berezin(heat_operator, z) - gaussian_convolution(0.5, z))
        for z in HEAT_POINTS
    )
    report.scalars["berezin_heat_defect"] = float(heat)
    report.check("berezin_heat_oracle", float(heat), tol, primary=False)

    odd = parse_symbol("odd_gaussian")
    odd_operator, _ = toeplitz_quadrature(odd, spec)
    odd_heat = max(
        abs(berezin(odd_operator, z) - heat_smoothed(odd, z))
        for z in HEAT_POINTS
    )
    report.scalars["berezin_heat_defect_odd"] = float(odd_heat)
    report.check(
        "berezin_heat_quadrature", float(odd_heat), tol, primary=False
    )
    return report
