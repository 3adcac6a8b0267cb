"""
Continuity moduli of operators under phase-space actions.

Three defects are measured, each in operator norm:

* ``shift``: ||W_z A W_z^* - A|| (the class C_1),
* ``modulation``: ||W_z A W_z - A|| (the class C_-1),
* ``theta``: ||W_z A W_(-Theta z) - A|| (the class C_Theta).

Sampling takes the sup over equispaced directions per radius, which is a
lower bound of the true sup.
"""

import numpy as np

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.fock_core.operators import (
    parity,
    parity_rotation,
    rotate_point,
    shift_alpha,
)
from quantum_harmonic.fock_core.weyl import (
    weyl_operator,
    weyl_truncation_error,
)
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import (
    ContinuityProfile,
    ExperimentReport,
    FockSpec,
    OperatorMatrix,
    PhasePoint,
)
from quantum_harmonic.models.helper.enums import Continuity_Mode_Choices

logger = get_logger(__name__)

DEFAULT_RADII = np.linspace(0.0, 1.0, 11)
DOMINANCE_FACTOR = 10.0


def _norm(M: np.ndarray) -> float:
    return float(np.linalg.norm(M, 2))


def direction_points(radius: float, directions: int, spec: FockSpec):
    """Points of modulus ``radius`` along equispaced phases.

    Tensor specs use the diagonal unit vector (1, ..., 1)/sqrt(n).
    """
    phases = np.exp(2j * np.pi * np.arange(directions) / directions)
    unit = np.full(spec.n, 1.0 / np.sqrt(spec.n))
    return [PhasePoint(tuple(radius * p * unit)) for p in phases]


def defect(A: OperatorMatrix, z, mode, theta=None) -> float:
    """Single-point defect for ``mode`` at ``z``."""
    mode = Continuity_Mode_Choices.coerce(mode, InvalidSpecError)
    W = weyl_operator(z, A.spec).entries
    if mode == Continuity_Mode_Choices.SHIFT:
        moved = W @ A.entries @ W.conj().T
    elif mode == Continuity_Mode_Choices.MODULATION:
        moved = W @ A.entries @ W
    else:
        if theta is None:
            raise InvalidSpecError("theta mode needs Theta", "theta")
        target = -rotate_point(theta, z)
        moved = W @ A.entries @ weyl_operator(target, A.spec).entries
    return _norm(moved - A.entries)


def continuity_modulus(
    A: OperatorMatrix,
    mode,
    theta=None,
    radii=None,
    directions: int = None,
) -> ContinuityProfile:
    """Sup over sampled directions of the ``mode`` defect per radius.

    A truncation-dominance warning is recorded wherever the modulus is
    within ``DOMINANCE_FACTOR`` of the known truncation error of W_z.
    """
    mode = Continuity_Mode_Choices.coerce(mode, InvalidSpecError)
    radii = DEFAULT_RADII if radii is None else np.asarray(radii, float)
    directions = directions or qha_setting("DIRECTIONS")
    if np.any(radii < 0):
        raise InvalidSpecError("radii must be nonnegative", "radii")

    moduli = np.zeros(radii.size)
    truncation = np.zeros(radii.size)
    notes = []
    for i, r in enumerate(radii):
        if r == 0.0:
            continue
        points = direction_points(r, directions, A.spec)
        moduli[i] = max(defect(A, z, mode, theta) for z in points)
        truncation[i] = weyl_truncation_error(points[0], A.spec)
        if moduli[i] <= DOMINANCE_FACTOR * truncation[i]:
            note = (
                f"{mode} modulus {moduli[i]:.2e} at r={r:.3g} is within "
                f"{DOMINANCE_FACTOR:g}x of the W_z truncation error "
                f"{truncation[i]:.2e}"
            )
            logger.warning(note)
            notes.append(note)
    return ContinuityProfile(radii, moduli, mode, truncation, notes)


def c_minus_one_witness(A: OperatorMatrix, radii=None, directions=None):
    """
    Largest gap between the modulation modulus of U A and the shift
    modulus of A.

    W_z U A W_z = U W_(-z) A W_z, so the two moduli agree once the
    direction set is closed under z -> -z.
    """
    directions = directions or qha_setting("DIRECTIONS")
    if directions % 2:
        raise InvalidSpecError(
            "direction count must be even for the mirrored comparison",
            "directions",
        )
    UA = parity(A.spec) @ A
    modulation = continuity_modulus(
        UA, Continuity_Mode_Choices.MODULATION, radii=radii,
        directions=directions,
    )
    shift = continuity_modulus(
        A, Continuity_Mode_Choices.SHIFT, radii=radii, directions=directions
    )
    gap = float(np.max(np.abs(modulation.moduli - shift.moduli)))
    return gap, modulation, shift


def theta_rotation_witness(
    A: OperatorMatrix, theta, radii=None, directions=None
):
    """
    Largest gap between the theta modulus of U_Theta A and the shift
    modulus of A.

    W_z U_Theta = U_Theta W_(Theta z), hence
    W_z U_Theta A W_(-Theta z) - U_Theta A = U_Theta (alpha_(Theta z)(A) - A);
    the comparison is exact when Theta maps the direction set onto itself.
    """
    rotated = parity_rotation(theta, A.spec) @ A
    theta_profile = continuity_modulus(
        rotated, Continuity_Mode_Choices.THETA, theta, radii, directions
    )
    shift = continuity_modulus(
        A, Continuity_Mode_Choices.SHIFT, radii=radii, directions=directions
    )
    gap = float(np.max(np.abs(theta_profile.moduli - shift.moduli)))
    return gap, theta_profile, shift


def theta_shift_bound_check(A: OperatorMatrix, theta, z, w):
    """
    Both sides of the alpha-invariance bound of the theta modulus.

    Returns ``(lhs, rhs)`` with lhs the theta defect of alpha_w(A) at z and
    rhs = theta defect of A at z + |1 - e^(i sigma(z - Theta z, w))| ||A||.
    """
    z, w = PhasePoint.of(z), PhasePoint.of(w)
    moved = shift_alpha(A, w)
    lhs = defect(moved, z, Continuity_Mode_Choices.THETA, theta)
    phase = np.exp(1j * (z - rotate_point(theta, z)).sigma(w))
    rhs = defect(A, z, Continuity_Mode_Choices.THETA, theta) + abs(
        1.0 - phase
    ) * A.op_norm()
    return lhs, rhs


def module_witness(
    A: OperatorMatrix,
    B: OperatorMatrix,
    radii=None,
    directions=None,
    slack: float = 1e-8,
) -> ExperimentReport:
    """
    Finite witness that C_-1 is a two-sided module over C_1.

    For A in C_1 and B in C_-1, pointwise
    W_z AB W_z - AB = (alpha_z(A) - A) W_z B W_z + A (W_z B W_z - B)
    and W_z BA W_z - BA
    = (W_z B W_z - B) alpha_(-z)(A) + B (alpha_(-z)(A) - A),
    so both modulation defects are bounded by
    ||B|| shift(A) + ||A|| modulation(B), evaluated at z and -z.
    """
    if A.spec != B.spec:
        raise InvalidSpecError("A and B must share a spec", "spec")
    radii = DEFAULT_RADII if radii is None else np.asarray(radii, float)
    directions = directions or qha_setting("DIRECTIONS")
    norm_a, norm_b = A.op_norm(), B.op_norm()
    AB, BA = A @ B, B @ A

    rows = []
    worst = -np.inf
    for r in radii[radii > 0]:
        for z in direction_points(r, directions, A.spec):
            shift_a = max(
                defect(A, z, Continuity_Mode_Choices.SHIFT),
                defect(A, -z, Continuity_Mode_Choices.SHIFT),
            )
            mod_b = defect(B, z, Continuity_Mode_Choices.MODULATION)
            bound = norm_b * shift_a + norm_a * mod_b
            left = defect(AB, z, Continuity_Mode_Choices.MODULATION)
            right = defect(BA, z, Continuity_Mode_Choices.MODULATION)
            worst = max(worst, left - bound, right - bound)
            rows.append(
                {
                    "radius": float(r),
                    "angle": float(np.angle(z.array[0])),
                    "ab": left,
                    "ba": right,
                    "bound": bound,
                }
            )

    report = ExperimentReport("module-witness")
    report.rows["samples"] = rows
    report.scalars["worst_excess"] = float(worst)
    report.check("bound_holds", float(worst), slack, "<=")
    return report
