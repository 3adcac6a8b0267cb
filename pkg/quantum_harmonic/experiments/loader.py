from pathlib import Path

import yaml

from quantum_harmonic.api.serializers import validate_config
from quantum_harmonic.errors import ConfigValidationError
from quantum_harmonic.models import ExperimentConfig


def read_config(path) -> dict:
    """Parse a YAML configuration file into a mapping."""
    try:
        data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigValidationError(
            f"cannot read config {path}: {exc.strerror}", "config"
        ) from exc
    except yaml.YAMLError as exc:
        raise ConfigValidationError(
            f"config {path} is not valid YAML: {exc}", "config"
        ) from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigValidationError(
            f"config {path} must be a mapping of sections", "config"
        )
    return data


def load_config(path=None, seed=None, out=None) -> ExperimentConfig:
    """
    Read and validate a configuration; command-line ``seed`` and ``out``
    override the file and are validated with it.
    """
    data = read_config(path) if path else {}
    if seed is not None:
        data["seed"] = seed
    if out is not None:
        data["output"] = {**data.get("output", {}), "dir": str(out)}
    return validate_config(data)
