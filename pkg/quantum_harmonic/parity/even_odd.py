"""Even/odd operators and the parity-eigenspace block structure."""

import numpy as np

from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.fock_core.operators import parity_rotation
from quantum_harmonic.models import EvenOddSplit, FockSpec, OperatorMatrix

SYMMETRY_TOL = 1e-10


def _parity_diagonal(spec: FockSpec) -> np.ndarray:
    return (-1.0) ** spec.degrees


def conjugate_by_parity(A: OperatorMatrix) -> np.ndarray:
    """U A U; U is diagonal, so this is an entry-wise sign flip."""
    u = _parity_diagonal(A.spec)
    return u[:, None] * A.entries * u[None, :]


def even_odd_split(A: OperatorMatrix) -> EvenOddSplit:
    """A_even = (A + UAU)/2, A_odd = (A - UAU)/2."""
    flipped = conjugate_by_parity(A)
    even = OperatorMatrix(0.5 * (A.entries + flipped), A.spec)
    odd = OperatorMatrix(0.5 * (A.entries - flipped), A.spec)
    residual = float(
        np.linalg.norm(even.entries + odd.entries - A.entries)
    )
    return EvenOddSplit(even, odd, residual)


def parity_indices(spec: FockSpec):
    """Basis indices of H_even and H_odd, in increasing order."""
    even = np.flatnonzero(spec.degrees % 2 == 0)
    odd = np.flatnonzero(spec.degrees % 2 == 1)
    return even, odd


def block_decompose(A: OperatorMatrix):
    """
    Blocks (A11, A12, A21, A22) of A with respect to H_even + H_odd.

    A11 maps H_even to H_even, A12 maps H_odd to H_even, and so on;
    blocks are plain arrays indexed by position within each eigenspace.
    """
    even, odd = parity_indices(A.spec)
    M = A.entries
    return (
        M[np.ix_(even, even)],
        M[np.ix_(even, odd)],
        M[np.ix_(odd, even)],
        M[np.ix_(odd, odd)],
    )


def assemble_blocks(blocks, spec: FockSpec) -> OperatorMatrix:
    """Inverse of ``block_decompose``."""
    a11, a12, a21, a22 = blocks
    even, odd = parity_indices(spec)
    entries = np.zeros((spec.dim, spec.dim), dtype=complex)
    entries[np.ix_(even, even)] = a11
    entries[np.ix_(even, odd)] = a12
    entries[np.ix_(odd, even)] = a21
    entries[np.ix_(odd, odd)] = a22
    return OperatorMatrix(entries, spec)


def make_even_with_index(k: int, spec: FockSpec) -> OperatorMatrix:
    """
    Even operator whose Fredholm index is ``k``.

    Identity on H_even; on H_odd (basis f_j = e_(2j+1)) a backward shift
    f_j -> f_(j-k) for k > 0 (kernel f_0..f_(k-1)) or a forward shift
    f_j -> f_(j+|k|) for k < 0 (cokernel of dimension |k|).
    """
    if abs(k) >= spec.dim / 4:
        raise InvalidSpecError(f"need |k| < D/4, got k={k}", "k")
    even, odd = parity_indices(spec)
    entries = np.zeros((spec.dim, spec.dim), dtype=complex)
    entries[even, even] = 1.0
    count = odd.size
    for j in range(count):
        target = j - k
        if 0 <= target < count:
            entries[odd[target], odd[j]] = 1.0
    return OperatorMatrix(entries, spec)


def symmetry_defects(A: OperatorMatrix, theta: complex, k: int) -> np.ndarray:
    """||U_theta A U_theta^* - theta^m A|| / ||A|| for m = 0..k-1."""
    if abs(theta**k - 1.0) > 1e-12:
        raise InvalidSpecError(f"theta is not a root of unity of order {k}")
    rotation = np.diag(parity_rotation(theta, A.spec).entries)
    conjugated = rotation[:, None] * A.entries * np.conj(rotation)[None, :]
    scale = max(np.linalg.norm(A.entries, 2), np.finfo(float).tiny)
    return np.array(
        [
            np.linalg.norm(conjugated - theta**m * A.entries, 2) / scale
            for m in range(k)
        ]
    )


def symmetry_class(
    A: OperatorMatrix, theta: complex, k: int, tol: float = SYMMETRY_TOL
):
    """m in 0..k-1 with U_theta A U_theta^* = theta^m A, or None."""
    defects = symmetry_defects(A, theta, k)
    m = int(np.argmin(defects))
    return m if defects[m] < tol else None
