"""index, index-parity, congruence and counterexample."""

from quantum_harmonic.experiments.families import (
    congruence_members,
    index_parity_members,
)
from quantum_harmonic.experiments.registry import experiment
from quantum_harmonic.fredholm.band import band_profile
from quantum_harmonic.fredholm.experiments import (
    congruence_experiment,
    counterexample_report,
    index_parity_experiment,
)
from quantum_harmonic.fredholm.index import index_deficiency, index_winding
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ExperimentConfig,
    ExperimentReport,
    FockSpec,
)
from quantum_harmonic.models.helper.enums import Experiment_Choices
from quantum_harmonic.quantize.symbols import parse_symbol
from quantum_harmonic.quantize.toeplitz import toeplitz

logger = get_logger(__name__)


@experiment(Experiment_Choices.INDEX)
def index(config: ExperimentConfig) -> ExperimentReport:
    """Both index estimates of a Toeplitz operator across truncations."""
    family = config.family("index")
    symbol = parse_symbol(family["symbol"])
    expected = family["expected"]
    tol = config.tol("index")
    report = ExperimentReport(str(Experiment_Choices.INDEX))
    report.config = dict(family)
    rows = []
    for dim in family["dims"]:
        A = toeplitz(symbol, FockSpec(dim))
        band = band_profile(A)
        deficiency = index_deficiency(A, tol)
        winding = index_winding(A)
        logger.info(
            "index of T[%s] at D=%d: deficiency %d, winding %d",
            symbol.name,
            dim,
            deficiency.value,
            winding.value,
        )
        rows.append(
            {
                "dim": dim,
                "lower": band.lower,
                "upper": band.upper,
                "deficiency": deficiency.value,
                "kernel": deficiency.kernel_dim,
                "cokernel": deficiency.cokernel_dim,
                "gap": deficiency.gap,
                "winding": winding.value,
                "winding_residual": winding.gap,
            }
        )
        report.check(f"D={dim}.deficiency", deficiency.value, expected, "==")
        report.check(f"D={dim}.winding", winding.value, expected, "==")
    report.rows["estimates"] = rows
    return report


@experiment(Experiment_Choices.INDEX_PARITY)
def index_parity(config: ExperimentConfig) -> ExperimentReport:
    members = index_parity_members(
        config.family("even_indices"), config.family("windings")
    )
    return index_parity_experiment(
        members, FockSpec(config.family("index_dim")), config.tol("index")
    )


@experiment(Experiment_Choices.CONGRUENCE)
def congruence(config: ExperimentConfig) -> ExperimentReport:
    spec = FockSpec(config.family("index_dim"))
    members = congruence_members(config.family("windings"))
    report = ExperimentReport(str(Experiment_Choices.CONGRUENCE))
    signs = {}
    for k in config.family("congruence_ks"):
        part = congruence_experiment(k, members, spec, config.tol("index"))
        signs[k] = part.scalars["empirical_sign"]
        report.merge(part, f"k={k}")
    report.scalars["signs"] = signs
    report.config = {"dim": spec.dim, "members": [m.name for m in members]}
    return report


@experiment(Experiment_Choices.COUNTEREXAMPLE)
def counterexample(config: ExperimentConfig) -> ExperimentReport:
    return counterexample_report(
        FockSpec(config.family("index_dim")),
        config.family("counterexample_ks"),
        config.tol("index"),
    )
