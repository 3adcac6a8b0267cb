"""Name -> runner registry of the experiment subcommands."""

from quantum_harmonic.errors import UnknownExperimentError
from quantum_harmonic.models.helper.enums import Experiment_Choices

EXPERIMENTS = {}


def experiment(name: Experiment_Choices):
    """Register ``runner(config) -> ExperimentReport`` under ``name``."""

    def decorator(runner):
        EXPERIMENTS[str(name)] = runner
        return runner

    return decorator


def get_experiment(name: str):
    try:
        return EXPERIMENTS[str(name)]
    except KeyError:
        raise UnknownExperimentError(
            f"unknown experiment {name!r}; choose one of: "
            f"{Experiment_Choices.get_available_choices()}",
            name,
        ) from None


def registered() -> list:
    """Registered names in declaration order of ``Experiment_Choices``."""
    return [name for name in Experiment_Choices.values if name in EXPERIMENTS]
