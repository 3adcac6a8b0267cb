from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class SymbolFn:
    """
    Phase-space symbol given as a black-box evaluator.

    Attributes:
        evaluator (Callable): Vectorized map from a complex array of points
            to complex values.
        name (str): Registry name, echoed in reports.
        angular_order (int | None): ``k`` when the symbol separates as
            ``radial(|z|) * (z/|z|)^k``; None for generic symbols.
        radial (Callable | None): Radial profile of a separable symbol.
        sup_bound (float | None): Known bound of ``|f|``.
        smoothness (str): Free-form tag ("smooth", "discontinuous at 0").
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    name: str = "symbol"
    angular_order: Optional[int] = None
    radial: Optional[Callable[[np.ndarray], np.ndarray]] = None
    sup_bound: Optional[float] = None
    smoothness: str = "smooth"

    def __call__(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return np.broadcast_to(
            np.asarray(self.evaluator(z), dtype=complex), z.shape
        )

    @property
    def separable(self) -> bool:
        return self.angular_order is not None and self.radial is not None

    @classmethod
    def separated(
        cls,
        radial: Callable[[np.ndarray], np.ndarray],
        angular_order: int,
        name: str,
        sup_bound: Optional[float] = None,
        smoothness: str = "smooth",
    ) -> "SymbolFn":
        """Symbol ``radial(|z|) * (z/|z|)^k`` with the angular part known."""

        def evaluate(z):
            r = np.abs(z)
            phase = np.exp(1j * angular_order * np.angle(z))
            return radial(r) * phase

        return cls(
            evaluate,
            name=name,
            angular_order=angular_order,
            radial=radial,
            sup_bound=sup_bound,
            smoothness=smoothness,
        )

    def reflect(self) -> "SymbolFn":
        """Reflected symbol z -> f(-z)."""
        evaluator = self.evaluator
        radial = self.radial
        if self.separable:
            sign = (-1) ** (self.angular_order % 2)
            radial = _scaled(self.radial, sign)
        return replace(
            self,
            evaluator=lambda z: evaluator(-np.asarray(z)),
            name=f"reflect({self.name})",
            radial=radial,
        )

    def conjugate(self) -> "SymbolFn":
        evaluator = self.evaluator
        if self.separable:
            radial = self.radial
            return replace(
                self,
                evaluator=lambda z: np.conj(evaluator(z)),
                name=f"conj({self.name})",
                angular_order=-self.angular_order,
                radial=lambda r: np.conj(radial(r)),
            )
        return replace(
            self,
            evaluator=lambda z: np.conj(evaluator(z)),
            name=f"conj({self.name})",
        )

    def combine(self, a: complex, other: "SymbolFn", b: complex) -> "SymbolFn":
        """Linear combination ``a * self + b * other``."""
        f, g = self.evaluator, other.evaluator
        bound = None
        if self.sup_bound is not None and other.sup_bound is not None:
            bound = abs(a) * self.sup_bound + abs(b) * other.sup_bound
        name = f"{a}*{self.name}+{b}*{other.name}"
        if (
            self.separable
            and other.separable
            and self.angular_order == other.angular_order
        ):
            rf, rg = self.radial, other.radial
            return SymbolFn.separated(
                lambda r: a * rf(r) + b * rg(r),
                self.angular_order,
                name,
                sup_bound=bound,
            )
        return SymbolFn(
            lambda z: a * f(z) + b * g(z), name=name, sup_bound=bound
        )


def _scaled(fn, factor):
    return lambda r: factor * fn(r)


@dataclass(frozen=True, eq=False)
class QuadratureScheme:
    """
    Polar quadrature for Toeplitz entries against the Gaussian measure.

    Attributes:
        radial_nodes (np.ndarray): Gauss-Legendre nodes in r on
            ``[0, radius]``.
        radial_weights (np.ndarray): Matching weights.
        angular_nodes (int): Trapezoidal angle count for generic symbols.
        radius (float): Cut-off radius; the basis densities
            r^(2m+1) e^(-r^2/2) are below 1e-30 beyond it for m < dim.
        accuracy (float): Max entry change under node doubling, once
            measured (NaN before).
    """

    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    angular_nodes: int
    radius: float
    accuracy: float = float("nan")

    @property
    def radial_count(self) -> int:
        return int(self.radial_nodes.size)

    def to_dict(self) -> dict:
        return {
            "radial_nodes": self.radial_count,
            "angular_nodes": self.angular_nodes,
            "radius": self.radius,
            "accuracy": self.accuracy,
        }
