"""Seeded operator, symbol and index families shared by the experiments."""

from functools import lru_cache, partial

import numpy as np

from quantum_harmonic.models import FamilyMember, FockSpec, OperatorMatrix
from quantum_harmonic.parity.even_odd import make_even_with_index
from quantum_harmonic.quantize.symbols import parse_symbol
from quantum_harmonic.quantize.toeplitz import toeplitz


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / (
        np.sqrt(2.0)
    )


def random_interior_operator(
    rng: np.random.Generator, spec: FockSpec, rank: int, support: int
) -> OperatorMatrix:
    """
    Sum of ``rank`` random outer products supported on the first
    ``support`` basis vectors, normalized to unit Frobenius norm.

    Small supports keep F_W(A) decaying well inside the phase-space grid.
    """
    entries = np.zeros((spec.dim, spec.dim), dtype=complex)
    left = _complex_normal(rng, (support, rank))
    right = _complex_normal(rng, (support, rank))
    entries[:support, :support] = left @ right.conj().T
    entries /= np.linalg.norm(entries)
    return OperatorMatrix(entries, spec)


def operator_family(rng, spec: FockSpec, count, rank, support):
    return [
        random_interior_operator(rng, spec, rank, support)
        for _ in range(count)
    ]


def smooth_symbols(rng: np.random.Generator, count: int, degree: int):
    seeds = rng.integers(0, 2**31, size=count)
    return [parse_symbol(f"random_smooth:{s}:{degree}") for s in seeds]


def ideal_members(rng: np.random.Generator, spec: FockSpec, support: int):
    """
    Operators with known ideal structure, as ``(name, A, X, Y)``.

    X indexes the right ideal {A : A^*|_X = 0} and Y the left ideal
    {A : A|_Y = 0}.
    """
    vacuum = OperatorMatrix.rank_one(spec, 0, 0)
    raising = OperatorMatrix.rank_one(spec, 1, 0)
    rowless = random_interior_operator(rng, spec, 2, support)
    entries = rowless.entries.copy()
    entries[0, :] = 0.0
    rowless = OperatorMatrix(entries / np.linalg.norm(entries), spec)
    return [
        ("vacuum", vacuum, [1, 2], [1, 2]),
        ("raising", raising, [0], [1]),
        ("row-free", rowless, [0], [0]),
    ]


@lru_cache(maxsize=32)
def _toeplitz_winding(order: int, spec: FockSpec) -> OperatorMatrix:
    return toeplitz(parse_symbol(f"winding:{order}"), spec)


def _even_with_index(k: int, spec: FockSpec) -> OperatorMatrix:
    return make_even_with_index(k, spec)


def winding_members(orders):
    return [
        FamilyMember(
            f"T[winding:{j}]", partial(_toeplitz_winding, j), toeplitz=True
        )
        for j in orders
    ]


def index_parity_members(even_indices, windings):
    """make_even_with_index(k) for every k, then T_((z/|z|)^j)."""
    even = [
        FamilyMember(f"make_even:{k}", partial(_even_with_index, k))
        for k in even_indices
    ]
    return even + winding_members(windings)


def congruence_members(windings):
    """Toeplitz windings together with the adjoint shift T_(conj(z)/|z|).

    make_even_with_index is left out: it has no rotation class for k > 2.
    """
    return winding_members(list(windings) + [-1])
