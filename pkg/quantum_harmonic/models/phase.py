import json
from dataclasses import asdict, dataclass, replace
from functools import cached_property
from pathlib import Path

import numpy as np

from quantum_harmonic.errors import InvalidSpecError
from quantum_harmonic.models.helper.enums import Provenance_Choices
from quantum_harmonic.models.helper.npz import npz_path


@dataclass(frozen=True)
class Grid:
    """
    Square sampling grid [-L, L)^2 of phase space (n = 1).

    Attributes:
        extent (float): L.
        points_per_axis (int): N, a power of two.

    Sample ``(i, j)`` sits at ``x_i + 1j * x_j`` with ``x_i = -L + i h``.
    The Fourier side uses the same box: transforms are evaluated directly
    at the grid points (matrix Fourier transform), so no ``L h_freq``
    constraint ties the two boxes together.
    """

    extent: float = 10.0
    points_per_axis: int = 256

    def __post_init__(self):
        n = self.points_per_axis
        if n < 4 or n & (n - 1):
            raise InvalidSpecError(
                "points per axis must be a power of two >= 4", "grid.N"
            )
        if self.extent <= 0:
            raise InvalidSpecError("grid extent must be positive", "grid.L")

    @property
    def spacing(self) -> float:
        return 2.0 * self.extent / self.points_per_axis

    @property
    def cell_area(self) -> float:
        return self.spacing**2

    @cached_property
    def coords(self) -> np.ndarray:
        return -self.extent + self.spacing * np.arange(self.points_per_axis)

    @cached_property
    def points(self) -> np.ndarray:
        """``N x N`` complex array of grid points."""
        return self.coords[:, None] + 1j * self.coords[None, :]

    @cached_property
    def reflection_index(self) -> np.ndarray:
        """Index map i -> (N - i) mod N realizing z -> -z on the grid."""
        n = self.points_per_axis
        return (n - np.arange(n)) % n

    def to_dict(self) -> dict:
        return {
            "L": self.extent,
            "N": self.points_per_axis,
            "h": self.spacing,
        }


@dataclass(frozen=True)
class ConventionParams:
    """
    Normalization constants of the phase-space Fourier stack.

    Attributes:
        name (str): Ledger tag.
        fourier_phase_scale (float): s in the phase e^(i s sigma(w, z)) of
            the symplectic Fourier transform.
        fourier_prefactor (float): c_sigma in front of that integral.
        twisted_phase_scale (float): Phase scale of the twisted
            convolution.
        twisted_prefactor (float): Prefactor of the twisted convolution.
        haar_normalization (float): c_H, the measure c_H d(xi) used by
            Fourier-Weyl synthesis.
    """

    name: str
    fourier_phase_scale: float
    fourier_prefactor: float
    twisted_phase_scale: float
    twisted_prefactor: float
    haar_normalization: float

    @property
    def involutive(self) -> bool:
        """Whether the symplectic Fourier transform squares to the identity."""
        scale = abs(self.fourier_phase_scale) / (2 * np.pi)
        return bool(np.isclose(self.fourier_prefactor, scale, rtol=1e-12))

    @property
    def tag(self) -> str:
        return (
            f"{self.name}(s={self.fourier_phase_scale:g},"
            f"c={self.fourier_prefactor:.6g},"
            f"cH={self.haar_normalization:.6g})"
        )

    def to_dict(self) -> dict:
        data = asdict(self)
        data["involutive"] = self.involutive
        return data

    @classmethod
    def unit_phase(cls) -> "ConventionParams":
        """Full phase e^(i sigma), (2 pi)^-1 prefactors, plain twisted sum."""
        return cls(
            name="unit-phase",
            fourier_phase_scale=1.0,
            fourier_prefactor=1.0 / (2 * np.pi),
            twisted_phase_scale=1.0,
            twisted_prefactor=1.0,
            haar_normalization=1.0 / (2 * np.pi),
        )

    @classmethod
    def audited(cls) -> "ConventionParams":
        """Set with F_op(A) = A U and F_W(BA) = F_W(B) *_sigma F_W(A)."""
        return cls(
            name="audited",
            fourier_phase_scale=-0.5,
            fourier_prefactor=1.0 / (4 * np.pi),
            twisted_phase_scale=-0.5,
            twisted_prefactor=1.0 / (2 * np.pi),
            haar_normalization=1.0 / (2 * np.pi),
        )

    @classmethod
    def half_phase(cls) -> "ConventionParams":
        """Half phase with the opposite sign; F_op(A) = U A."""
        return replace(
            cls.audited(), name="half-phase", fourier_phase_scale=0.5
        )

    @classmethod
    def preset(cls, name: str) -> "ConventionParams":
        presets = {
            "unit-phase": cls.unit_phase,
            "audited": cls.audited,
            "half-phase": cls.half_phase,
        }
        try:
            return presets[name]()
        except KeyError:
            raise InvalidSpecError(
                f"unknown convention preset {name!r}; "
                f"choose from {sorted(presets)}",
                "conventions.preset",
            ) from None


@dataclass(frozen=True, eq=False)
class GridSymbol:
    """
    Symbol sampled on a grid.

    Attributes:
        grid (Grid): Sampling grid.
        samples (np.ndarray): ``N x N`` complex samples.
        provenance (Provenance_Choices): Sampled or produced by a transform.
        name (str): Free-form label.
        convention (str): Tag of the conventions a transform ran under,
            empty for sampled symbols.
    """

    grid: Grid
    samples: np.ndarray
    provenance: Provenance_Choices = Provenance_Choices.SAMPLED
    name: str = ""
    convention: str = ""

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        n = self.grid.points_per_axis
        if samples.shape != (n, n):
            raise InvalidSpecError(
                f"expected {n}x{n} samples, got {samples.shape}", "samples"
            )
        object.__setattr__(self, "samples", samples)

    @classmethod
    def sample(cls, symbol, grid: Grid) -> "GridSymbol":
        """Evaluate a ``SymbolFn`` (or any vectorized callable) on a grid."""
        name = getattr(symbol, "name", "")
        return cls(grid, symbol(grid.points), Provenance_Choices.SAMPLED, name)

    def derived(
        self, samples, name: str, convention: str = None
    ) -> "GridSymbol":
        return GridSymbol(
            self.grid,
            samples,
            Provenance_Choices.TRANSFORM,
            name,
            self.convention if convention is None else convention,
        )

    def reflect(self) -> "GridSymbol":
        index = self.grid.reflection_index
        return replace(
            self,
            samples=self.samples[np.ix_(index, index)],
            name=f"reflect({self.name})",
        )

    def boundary_max(self) -> float:
        """Largest modulus on the outer ring of the grid."""
        s = np.abs(self.samples)
        return float(
            max(s[0, :].max(), s[-1, :].max(), s[:, 0].max(), s[:, -1].max())
        )

    def __add__(self, other):
        return self.derived(self.samples + other.samples, "sum")

    def __mul__(self, scalar):
        return self.derived(scalar * self.samples, self.name)

    __rmul__ = __mul__

    def dump(self, path, convention: str = "") -> Path:
        """Write samples and a header (L, N, convention) as ``.npz``."""
        path = npz_path(path)
        header = {
            "L": self.grid.extent,
            "N": self.grid.points_per_axis,
            "convention": convention or self.convention,
            "provenance": str(self.provenance),
            "name": self.name,
            "order": "row-major",
        }
        np.savez(path, header=json.dumps(header), samples=self.samples)
        return path

    @classmethod
    def load(cls, path) -> "GridSymbol":
        with np.load(npz_path(path), allow_pickle=False) as data:
            header = json.loads(str(data["header"]))
            samples = np.array(data["samples"])
        return cls(
            Grid(header["L"], header["N"]),
            samples,
            Provenance_Choices(header["provenance"]),
            header.get("name", ""),
            header.get("convention", ""),
        )


@dataclass(frozen=True)
class FourierFit:
    """
    Best fit of F_op(A) by scale * D_t(A) U.

    Attributes:
        scale (complex): Least-squares constant c.
        dilation (float): Argument dilation t of D_t(A) = F_W^-1[F_W(A)(t .)].
        residual (float): Relative Frobenius residual after the fit.
        candidates (tuple[dict, ...]): Residual per tried dilation.
    """

    scale: complex
    dilation: float
    residual: float
    candidates: tuple = ()

    def to_dict(self) -> dict:
        return {
            "scale": self.scale,
            "dilation": self.dilation,
            "residual": self.residual,
            "candidates": list(self.candidates),
        }
