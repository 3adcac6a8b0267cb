"""Weyl (displacement) operators on the truncated Fock space."""

import numpy as np
from scipy import linalg
from scipy.special import eval_genlaguerre, gammaln

from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.models import FockSpec, OperatorMatrix, PhasePoint
from quantum_harmonic.fock_core.basis import check_point

# Points per chunk when tabulating exact Weyl compressions.
CHUNK_ENTRIES = 2_000_000


def creation(dim: int) -> np.ndarray:
    """Truncated creation operator, a^dagger e_m = sqrt(m + 1) e_(m+1)."""
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=-1).astype(
        complex
    )


def annihilation(dim: int) -> np.ndarray:
    return creation(dim).T.copy()


def displacement_parameter(z: complex) -> complex:
    """alpha with W_z = exp(alpha a^dagger - conj(alpha) a).

    Fixed by W_z e_0 = k_z: the coefficient of e_1 in k_z is
    e^(-|z|^2/4) conj(z) / sqrt(2), hence alpha = conj(z) / sqrt(2).
    """
    return np.conj(z) / np.sqrt(2.0)


def _single_mode_weyl(z: complex, dim: int) -> np.ndarray:
    alpha = displacement_parameter(z)
    generator = alpha * creation(dim) - np.conj(alpha) * annihilation(dim)
    return linalg.expm(generator)


def weyl_operator(z, spec: FockSpec) -> OperatorMatrix:
    """
    Truncated Weyl operator W_z, the exponential of the truncated generator.

    The generator is anti-Hermitian, so the result is exactly unitary and
    W_(-z) is exactly its inverse; conjugation by the parity operator flips
    the generator's sign, which makes W_z U = U W_(-z) hold to rounding.
    Matrix entries far from e_0 carry truncation error growing with |z|.
    """
    point = PhasePoint.of(z)
    check_point(point, spec)
    entries = np.ones((1, 1), dtype=complex)
    for component, factor in zip(point.components, spec.factors):
        entries = np.kron(entries, _single_mode_weyl(component, factor.dim))
    return OperatorMatrix(spec.from_kron(entries), spec)


def weyl_matrix_elements(points, block: int) -> np.ndarray:
    """
    Exact matrix elements <e_l, W_z e_m>, l, m < block, for many points.

    With alpha = conj(z)/sqrt(2) and x = |alpha|^2 the displacement
    elements are, for l >= m,
    sqrt(m!/l!) alpha^(l-m) e^(-x/2) L_m^(l-m)(x), and for l < m
    sqrt(l!/m!) (-conj(alpha))^(m-l) e^(-x/2) L_l^(m-l)(x).
    Returns an array of shape ``points.shape + (block, block)``.
    """
    points = np.asarray(points, dtype=complex)
    shape = points.shape
    flat = points.reshape(-1)
    out = np.empty((flat.size, block, block), dtype=complex)
    step = max(1, CHUNK_ENTRIES // (block * block))
    for start in range(0, flat.size, step):
        out[start:start + step] = _weyl_elements_chunk(
            flat[start:start + step], block
        )
    return out.reshape(shape + (block, block))


def _weyl_elements_chunk(points: np.ndarray, block: int) -> np.ndarray:
    index = np.arange(block)
    l_idx, m_idx = np.meshgrid(index, index, indexing="ij")
    low = np.minimum(l_idx, m_idx)
    high = np.maximum(l_idx, m_idx)
    offset = high - low

    alpha = displacement_parameter(points)[:, None, None]
    x = np.abs(alpha) ** 2
    # Lower triangle uses alpha, upper triangle -conj(alpha).
    base = np.where(l_idx >= m_idx, alpha, -np.conj(alpha))
    with np.errstate(divide="ignore", invalid="ignore"):
        log_base = np.log(np.abs(base))
        log_power = np.where(offset > 0, offset * log_base, 0.0)
    log_modulus = (
        0.5 * (gammaln(low + 1.0) - gammaln(high + 1.0))
        - x / 2.0
        + log_power
    )
    phase = np.exp(1j * offset * np.angle(base))
    laguerre = eval_genlaguerre(low, offset, x)
    values = np.exp(log_modulus) * phase * laguerre
    # Overflowing Laguerre values only meet underflowed prefactors.
    return np.where(np.isfinite(values), values, 0.0)


def weyl_compression(z, spec: FockSpec) -> OperatorMatrix:
    """Exact compression P W_z P of the untruncated Weyl operator (n = 1)."""
    point = PhasePoint.of(z)
    check_point(point, spec)
    entries = np.ones((1, 1), dtype=complex)
    for component, factor in zip(point.components, spec.factors):
        entries = np.kron(
            entries, weyl_matrix_elements(component, factor.dim)
        )
    return OperatorMatrix(spec.from_kron(entries), spec)


def weyl_truncation_error(z, spec: FockSpec, block: int = None) -> float:
    """Distance between the exponential construction and the exact
    compression on the first ``block`` basis vectors (default D/2)."""
    block = spec.dim // 2 if block is None else block
    built = weyl_operator(z, spec).entries[:, :block]
    exact = weyl_compression(z, spec).entries[:, :block]
    return float(np.linalg.norm(built - exact, 2))


def ccr_phase(z, w) -> complex:
    """Phase e^(-i sigma(z, w) / 2) of W_z W_w = phase * W_(z+w)."""
    return complex(np.exp(-0.5j * PhasePoint.of(z).sigma(w)))


def ccr_defect(z, w, spec: FockSpec, block: int) -> float:
    """Operator-norm CCR defect on the top-left ``block x block`` block."""
    z, w = PhasePoint.of(z), PhasePoint.of(w)
    if block > spec.dim:
        raise InvalidSpecError(
            "block must not exceed the truncation size", "block"
        )
    product = weyl_operator(z, spec).entries @ weyl_operator(w, spec).entries
    combined = ccr_phase(z, w) * weyl_operator(z + w, spec).entries
    defect = (product - combined)[:block, :block]
    return float(np.linalg.norm(defect, 2))
