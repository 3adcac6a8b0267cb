"""Parity, phase rotations, phase-space actions and tensor products."""

import numpy as np

from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import DimensionOverflowError, InvalidSpecError
from quantum_harmonic.fock_core.weyl import weyl_operator
from quantum_harmonic.models import FockSpec, OperatorMatrix, PhasePoint

UNIMODULAR_TOL = 1e-12


def parity(spec: FockSpec) -> OperatorMatrix:
    """Parity operator U f(z) = f(-z): diagonal (-1)^degree(m)."""
    return OperatorMatrix(np.diag((-1.0) ** spec.degrees), spec)


def rotation_phases(theta, spec: FockSpec) -> np.ndarray:
    """Diagonal of U_Theta for a scalar theta or per-factor phases."""
    phases = np.atleast_1d(np.asarray(theta, dtype=complex))
    if phases.size == 1 and spec.n > 1:
        phases = np.repeat(phases, spec.n)
    if phases.size != spec.n:
        raise InvalidSpecError(
            f"Theta needs {spec.n} diagonal phases, got {phases.size}",
            "theta",
        )
    if np.any(np.abs(np.abs(phases) - 1.0) > UNIMODULAR_TOL):
        raise InvalidSpecError("Theta must be unimodular", "theta")
    return np.prod(phases[None, :] ** spec.factor_degrees, axis=1)


def parity_rotation(theta, spec: FockSpec) -> OperatorMatrix:
    """
    Rotation U_Theta f(z) = f(Theta z) for a diagonal unitary Theta.

    Entries are theta^degree(m) (products over factors for tensor specs);
    theta = -1 gives ``parity(spec)``.
    """
    return OperatorMatrix(np.diag(rotation_phases(theta, spec)), spec)


def rotate_point(theta, z) -> PhasePoint:
    """Theta z for scalar or per-factor Theta."""
    point = PhasePoint.of(z)
    phases = np.broadcast_to(
        np.atleast_1d(np.asarray(theta, dtype=complex)), (point.n,)
    )
    return PhasePoint(tuple(phases * point.array))


def shift_alpha(A: OperatorMatrix, z) -> OperatorMatrix:
    """Phase-space shift alpha_z(A) = W_z A W_z^*."""
    W = weyl_operator(z, A.spec).entries
    return OperatorMatrix(W @ A.entries @ W.conj().T, A.spec)


def modulate_gamma(A: OperatorMatrix, z) -> OperatorMatrix:
    """Modulation gamma_z(A) = W_(z/2) A W_(z/2)."""
    W = weyl_operator(PhasePoint.of(z).scaled(0.5), A.spec).entries
    return OperatorMatrix(W @ A.entries @ W, A.spec)


def rotation_intertwining_defect(theta, z, spec: FockSpec) -> float:
    """
    ||U_theta W_z - W_(conj(theta) z) U_theta||.

    With U_theta e_m = theta^m e_m, conjugating the Weyl generator by
    U_theta multiplies alpha by theta, i.e. replaces z by conj(theta) z.
    """
    rotation = parity_rotation(theta, spec).entries
    left = rotation @ weyl_operator(z, spec).entries
    rotated = rotate_point(np.conj(theta), z)
    right = weyl_operator(rotated, spec).entries @ rotation
    return float(np.linalg.norm(left - right, 2))


def tensor_product(A: OperatorMatrix, B: OperatorMatrix) -> OperatorMatrix:
    """
    Kronecker product on the product spec, reordered by total degree.

    Raises ``DimensionOverflowError`` past ``QHA["MAX_PRODUCT_DIM"]``.
    """
    if A.spec.is_tensor or B.spec.is_tensor:
        raise InvalidSpecError(
            "tensor_product expects single-mode factors", "spec"
        )
    cap = qha_setting("MAX_PRODUCT_DIM")
    if A.spec.dim * B.spec.dim > cap:
        raise DimensionOverflowError(
            f"product dimension {A.spec.dim * B.spec.dim} exceeds cap {cap}",
            "dim",
        )
    spec = FockSpec.product(A.spec.dim, B.spec.dim)
    return OperatorMatrix(spec.from_kron(np.kron(A.entries, B.entries)), spec)
