from dataclasses import dataclass, field

import numpy as np

from quantum_harmonic.models.fock import FockSpec
from quantum_harmonic.models.helper.enums import Experiment_Choices
from quantum_harmonic.models.phase import ConventionParams, Grid


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Validated experiment configuration.

    Attributes:
        seed (int): Root seed; every experiment draws from its own stream
            derived from it.
        spec (FockSpec): Truncation of the Fock-space experiments.
        grid (Grid): Phase-space grid of the Fourier experiments.
        conventions (ConventionParams): Convention set in effect.
        tolerances (dict): Verdict thresholds by name.
        families (dict): Family sizes and members by name.
        output_dir (str): Directory report files are written to.
        expected_failures (tuple[str, ...]): Experiments a negative-control
            config is meant to fail.
        source (dict): The validated mapping, echoed into reports.
    """

    seed: int
    spec: FockSpec
    grid: Grid
    conventions: ConventionParams
    tolerances: dict
    families: dict
    output_dir: str
    expected_failures: tuple = ()
    source: dict = field(default_factory=dict)

    def tol(self, name: str) -> float:
        return self.tolerances[name]

    def family(self, name: str):
        return self.families[name]

    def rng(self, experiment: str) -> np.random.Generator:
        """Independent stream per experiment, stable under reordering."""
        stream = Experiment_Choices.values.index(str(experiment))
        sequence = np.random.SeedSequence(self.seed, spawn_key=(stream,))
        return np.random.default_rng(sequence)

    def to_dict(self) -> dict:
        return dict(self.source)
