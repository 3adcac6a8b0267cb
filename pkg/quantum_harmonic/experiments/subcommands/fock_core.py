"""ccr-check and parity-check."""

import numpy as np

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.experiments.registry import experiment
from quantum_harmonic.fock_core.basis import kernel_overlap
from quantum_harmonic.fock_core.operators import (
    parity,
    rotation_intertwining_defect,
)
from quantum_harmonic.fock_core.weyl import (
    ccr_phase,
    weyl_operator,
    weyl_truncation_error,
)
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ExperimentConfig,
    ExperimentReport,
    FockSpec,
    PhasePoint,
)
from quantum_harmonic.models.helper.enums import Experiment_Choices

logger = get_logger(__name__)

# CCR defects at this level are rounding, not truncation.
ROUNDING_FLOOR = 1e-13


def sample_points(rng: np.random.Generator, count: int, radius: float, n):
    """Uniform samples of the ball |z| <= radius in C^n."""
    directions = rng.standard_normal((count, n)) + 1j * rng.standard_normal(
        (count, n)
    )
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = radius * rng.random(count) ** (1.0 / (2 * n))
    return [PhasePoint(tuple(r * d)) for r, d in zip(radii, directions)]


def grown(spec: FockSpec):
    """Same spec with every factor doubled, or None past the product cap."""
    if not spec.is_tensor:
        return FockSpec(2 * spec.dim)
    doubled = [2 * d for d in spec.tensor_factors]
    if int(np.prod(doubled)) > qha_setting("MAX_PRODUCT_DIM"):
        return None
    return FockSpec.product(*doubled)


def interior_indices(spec: FockSpec) -> np.ndarray:
    """Indices whose degree in every factor is below half the factor dim."""
    limits = np.array([factor.dim // 2 for factor in spec.factors])
    return np.flatnonzero(np.all(spec.factor_degrees < limits, axis=1))


def interior_ccr_defect(z, w, spec: FockSpec) -> float:
    W = {p: weyl_operator(p, spec).entries for p in (z, w, z + w)}
    defect = W[z] @ W[w] - ccr_phase(z, w) * W[z + w]
    keep = interior_indices(spec)
    return float(np.linalg.norm(defect[np.ix_(keep, keep)], 2))


@experiment(Experiment_Choices.CCR_CHECK)
def ccr_check(config: ExperimentConfig) -> ExperimentReport:
    spec = config.spec
    rng = config.rng(Experiment_Choices.CCR_CHECK)
    count = config.family("ccr_pairs")
    radius = config.family("point_radius")
    zs = sample_points(rng, count, radius, spec.n)
    ws = sample_points(rng, count, radius, spec.n)

    report = ExperimentReport(str(Experiment_Choices.CCR_CHECK))
    report.config = {"pairs": count, "radius": radius, "dim": spec.dim}
    defects = np.array(
        [interior_ccr_defect(z, w, spec) for z, w in zip(zs, ws)]
    )
    report.arrays["defects"] = defects
    worst = float(defects.max())
    report.scalars["max_defect"] = worst
    report.check("max_defect", worst, config.tol("ccr"))

    larger = grown(spec)
    if larger is None:
        report.warnings.append("doubled truncation exceeds the product cap")
    else:
        doubled = np.array(
            [interior_ccr_defect(z, w, larger) for z, w in zip(zs, ws)]
        )
        report.arrays["defects_doubled"] = doubled
        report.scalars["max_defect_doubled"] = float(doubled.max())
        report.check(
            "improves_with_dim",
            float(doubled.max()),
            max(worst, ROUNDING_FLOOR),
            "<=",
            primary=False,
        )
    # <W_z e_0, e_0> is the kernel overlap <k_0, k_z> = e^(-|z|^2/4).
    origin = np.zeros(spec.n)
    vacuum = max(
        abs(weyl_operator(z, spec).entries[0, 0] - kernel_overlap(origin, z))
        for z in zs
    )
    report.scalars["vacuum_expectation_defect"] = float(vacuum)
    report.check(
        "vacuum_expectation",
        float(vacuum),
        config.tol("ccr"),
        primary=False,
    )
    if not spec.is_tensor:
        report.scalars["weyl_truncation_error"] = weyl_truncation_error(
            radius, spec
        )
    return report


def parity_defect(z, spec: FockSpec) -> float:
    """||W_z U - U W_(-z)|| over the whole truncation."""
    U = parity(spec).entries
    left = weyl_operator(z, spec).entries @ U
    right = U @ weyl_operator(-z, spec).entries
    return float(np.linalg.norm(left - right, 2))


@experiment(Experiment_Choices.PARITY_CHECK)
def parity_check(config: ExperimentConfig) -> ExperimentReport:
    spec = config.spec
    rng = config.rng(Experiment_Choices.PARITY_CHECK)
    count = config.family("parity_points")
    radius = config.family("point_radius")
    points = sample_points(rng, count, radius, spec.n)

    report = ExperimentReport(str(Experiment_Choices.PARITY_CHECK))
    report.config = {"points": count, "radius": radius}
    for label, current in (("dim", spec), ("dim_doubled", grown(spec))):
        if current is None:
            continue
        defects = np.array([parity_defect(z, current) for z in points])
        report.arrays[f"defects_{label}"] = defects
        report.check(
            f"parity_relation.{label}",
            float(defects.max()),
            config.tol("parity"),
            note=f"D={current.dim}",
        )

    theta = np.exp(1j * np.pi / 3)
    rotation = max(
        rotation_intertwining_defect(theta, z, spec) for z in points
    )
    report.scalars["rotation_intertwining"] = rotation
    report.check(
        "rotation_intertwining",
        rotation,
        1e-10,
        primary=False,
        note="U_theta W_z = W_(conj(theta) z) U_theta",
    )
    logger.debug("parity relation checked at %d points", count)
    return report
