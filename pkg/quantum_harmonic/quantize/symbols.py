"""
Symbol registry addressable by name and parameters.

Names look like ``winding:3``, ``gaussian:0.5`` or ``bump:0.5:0.25``;
every builder takes its parameters as strings in registry order.
"""

import numpy as np

from quantum_harmonic.errors import UnknownSymbolError
from quantum_harmonic.models import SymbolFn

SYMBOLS = {}


def register(name: str):
    def decorator(builder):
        SYMBOLS[name] = builder
        return builder

    return decorator


@register("constant")
def constant(c: str = "1") -> SymbolFn:
    value = complex(c)
    return SymbolFn.separated(
        lambda r: np.full(np.shape(r), value),
        0,
        f"constant:{c}",
        sup_bound=abs(value),
    )


@register("winding")
def winding(k: str = "1") -> SymbolFn:
    """(z/|z|)^k, unimodular and discontinuous at the origin."""
    order = int(k)
    return SymbolFn.separated(
        lambda r: np.ones(np.shape(r)),
        order,
        f"winding:{order}",
        sup_bound=1.0,
        smoothness="discontinuous at 0",
    )


@register("gaussian")
def gaussian(a: str = "0.5") -> SymbolFn:
    """e^(-a |z|^2)."""
    width = float(a)
    return SymbolFn.separated(
        lambda r: np.exp(-width * np.asarray(r) ** 2),
        0,
        f"gaussian:{a}",
        sup_bound=1.0,
    )


@register("radial_gaussian_winding")
def radial_gaussian_winding(k: str = "1", a: str = "0.5") -> SymbolFn:
    """e^(-a |z|^2) (z/|z|)^k."""
    order, width = int(k), float(a)
    return SymbolFn.separated(
        lambda r: np.exp(-width * np.asarray(r) ** 2),
        order,
        f"radial_gaussian_winding:{order}:{a}",
        sup_bound=1.0,
    )


@register("bump")
def bump(a: str = "0.5", b: str = "0.25") -> SymbolFn:
    """1 + a e^(-b |z|^2)."""
    height, width = float(a), float(b)
    return SymbolFn.separated(
        lambda r: 1.0 + height * np.exp(-width * np.asarray(r) ** 2),
        0,
        f"bump:{a}:{b}",
        sup_bound=1.0 + abs(height),
    )


@register("odd_gaussian")
def odd_gaussian() -> SymbolFn:
    """Re(z) e^(-|z|^2/2)."""
    return SymbolFn(
        lambda z: np.real(z) * np.exp(-np.abs(z) ** 2 / 2.0),
        name="odd_gaussian",
        sup_bound=float(np.exp(-0.5)),
    )


@register("shifted_gaussian")
def shifted_gaussian(x: str = "1", y: str = "0", a: str = "0.5") -> SymbolFn:
    """e^(-a |z - z0|^2); neither even nor odd for z0 != 0."""
    center, width = complex(float(x), float(y)), float(a)
    return SymbolFn(
        lambda z: np.exp(-width * np.abs(z - center) ** 2),
        name=f"shifted_gaussian:{x}:{y}:{a}",
        sup_bound=1.0,
    )


@register("random_smooth")
def random_smooth(seed: str = "0", degree: str = "3") -> SymbolFn:
    """Seeded sum of c_jk z^j conj(z)^k e^(-|z|^2/2), j + k <= degree."""
    rng = np.random.default_rng(int(seed))
    top = int(degree)
    powers = [(j, k) for j in range(top + 1) for k in range(top + 1 - j)]
    coefficients = (
        rng.standard_normal(len(powers))
        + 1j * rng.standard_normal(len(powers))
    ) / np.sqrt(2 * len(powers))

    def evaluate(z):
        total = np.zeros(np.shape(z), dtype=complex)
        for (j, k), c in zip(powers, coefficients):
            total = total + c * z**j * np.conj(z) ** k
        return total * np.exp(-np.abs(z) ** 2 / 2.0)

    return SymbolFn(evaluate, name=f"random_smooth:{seed}:{degree}")


@register("delta")
def delta(eps: str = "0.05") -> SymbolFn:
    """Unit-mass Gaussian e^(-|z|^2 / 2 eps^2) / (2 pi eps^2)."""
    width = float(eps)
    if width <= 0:
        raise ValueError("eps must be positive")
    peak = 1.0 / (2 * np.pi * width**2)
    return SymbolFn.separated(
        lambda r: peak * np.exp(-np.asarray(r) ** 2 / (2 * width**2)),
        0,
        f"delta:{eps}",
        sup_bound=peak,
    )


def parse_symbol(name: str) -> SymbolFn:
    """Build a registered symbol from ``name[:param[:param...]]``."""
    head, *params = name.split(":")
    try:
        builder = SYMBOLS[head]
    except KeyError:
        raise UnknownSymbolError(
            f"unknown symbol {name!r}; registered: {sorted(SYMBOLS)}", name
        ) from None
    try:
        return builder(*params)
    except (TypeError, ValueError) as exc:
        raise UnknownSymbolError(
            f"bad parameters for symbol {name!r}: {exc}", name
        ) from exc


def symbol_reflect(f: SymbolFn) -> SymbolFn:
    """beta_-(f)(z) = f(-z)."""
    return f.reflect()
