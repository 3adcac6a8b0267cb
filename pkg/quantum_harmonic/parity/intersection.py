"""
Fixed-eigenspace splits and the Berezin decay probe for tensor specs.

For diagonal unitaries Theta_1..Theta_d acting on C^n the complement
V_0 of the common fixed space is spanned by the coordinates on which some
Theta_j is not 1; on the tensor side these are whole factors.
"""

import itertools

import numpy as np

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ExperimentReport,
    OperatorMatrix,
    PhasePoint,
    SubspaceSplit,
)
from quantum_harmonic.quantize.berezin import berezin_with_tail

logger = get_logger(__name__)

FIXED_TOL = 1e-12


def _diagonal_phases(theta) -> np.ndarray:
    array = np.asarray(theta, dtype=complex)
    if array.ndim == 2:
        if array.shape[0] != array.shape[1]:
            raise InvalidSpecError("Theta must be square", "theta")
        if np.any(np.abs(array - np.diag(np.diag(array))) > FIXED_TOL):
            raise InvalidSpecError(
                "Theta must be diagonal in the tensor basis", "theta"
            )
        array = np.diag(array)
    elif array.ndim != 1:
        raise InvalidSpecError(
            "Theta is a phase vector or a diagonal matrix", "theta"
        )
    if np.any(np.abs(np.abs(array) - 1.0) > FIXED_TOL):
        raise InvalidSpecError("Theta must be unitary", "theta")
    return array


def fixed_eigenspace_complement(thetas) -> SubspaceSplit:
    """Coordinates spanning V_0 = (intersection of E_Theta_j(1))^perp."""
    phases = [_diagonal_phases(theta) for theta in thetas]
    if not phases:
        raise InvalidSpecError("need at least one Theta", "thetas")
    n = phases[0].size
    if any(p.size != n for p in phases):
        raise InvalidSpecError("every Theta must act on C^n", "thetas")
    moved = np.zeros(n, dtype=bool)
    for p in phases:
        moved |= np.abs(p - 1.0) > FIXED_TOL
    return SubspaceSplit(
        tuple(int(i) for i in np.flatnonzero(moved)),
        tuple(int(i) for i in np.flatnonzero(~moved)),
    )


def _complement_grid(count: int, extent: float, points: int):
    axis = np.linspace(-extent, extent, points)
    plane = (axis[:, None] + 1j * axis[None, :]).ravel()
    plane = plane[np.abs(plane) <= extent + 1e-12]
    for combo in itertools.product(plane, repeat=count):
        combo = np.asarray(combo, dtype=complex)
        if np.linalg.norm(combo) <= extent + 1e-12:
            yield combo


def _assemble(split: SubspaceSplit, n: int, v: np.ndarray, w: np.ndarray):
    components = np.zeros(n, dtype=complex)
    components[list(split.v0_factors)] = v
    components[list(split.complement_factors)] = w
    return PhasePoint(tuple(components))


def intersection_probe(
    A: OperatorMatrix,
    theta,
    radii=None,
    w_extent: float = 1.5,
    w_points: int = 5,
    directions: int = 4,
    flat_tol: float = 1e-6,
    strict: bool = False,
) -> ExperimentReport:
    """
    Sample |A~(v + w)| for v in V_0 of growing modulus and w in a bounded
    grid of the complement.

    The decay envelope sup_w |A~(v + w)| is reported against |v|;
    flatness along the complement is judged on |A~(v + w)| / |A~(w)|,
    which does not depend on w for product operators. Coherent tails are
    recorded per sample; with ``strict`` they raise instead.
    """
    if not A.spec.is_tensor:
        raise InvalidSpecError("the probe needs a tensor spec", "spec")
    split = fixed_eigenspace_complement([theta])
    if not split.v0_factors:
        raise InvalidSpecError("Theta fixes every coordinate", "theta")
    radii = (
        np.linspace(0.0, 4.0, 9) if radii is None
        else np.asarray(radii, float)
    )
    tol = qha_setting("TAIL_TOLERANCE")
    n = A.spec.n
    moving = len(split.v0_factors)
    unit = np.full(moving, 1.0 / np.sqrt(moving))
    phases = np.exp(2j * np.pi * np.arange(directions) / directions)
    grid = list(
        _complement_grid(len(split.complement_factors), w_extent, w_points)
    )

    baseline = np.empty(len(grid))
    for j, w in enumerate(grid):
        origin = _assemble(split, n, np.zeros(moving), w)
        baseline[j] = abs(berezin_with_tail(A, origin, strict, tol)[0])
    envelope = np.zeros(radii.size)
    max_tails = np.zeros(radii.size)
    flatness = 0.0
    for i, r in enumerate(radii):
        for p in phases:
            values = np.empty(len(grid))
            for j, w in enumerate(grid):
                z = _assemble(split, n, r * p * unit, w)
                value, tail = berezin_with_tail(A, z, strict, tol)
                values[j] = abs(value)
                max_tails[i] = max(max_tails[i], tail)
            envelope[i] = max(envelope[i], values.max())
            usable = baseline > np.finfo(float).tiny
            if usable.any():
                ratio = values[usable] / baseline[usable]
                if ratio.max() > 0:
                    variation = (ratio.max() - ratio.min()) / ratio.max()
                    flatness = max(flatness, float(variation))

    report = ExperimentReport("intersection-probe")
    report.config = {
        "theta": [complex(t) for t in np.atleast_1d(_diagonal_phases(theta))],
        "w_extent": w_extent,
        "w_points": w_points,
        "directions": directions,
    }
    report.scalars.update(
        {
            "split": split.to_dict(),
            "flatness": flatness,
            "decay_ratio": float(envelope[-1] / envelope[0])
            if envelope[0] > 0
            else 0.0,
            "max_tail": float(max_tails.max()),
        }
    )
    report.arrays["radii"] = radii
    report.arrays["envelope"] = envelope
    report.arrays["tails"] = max_tails
    if max_tails.max() > tol:
        note = (
            f"coherent tails up to {max_tails.max():.2e} exceed {tol:.1e}"
        )
        logger.warning(note)
        report.warnings.append(note)
    report.check("flat_along_complement", flatness, flat_tol, "<")
    return report
