"""Configuration-driven experiment runner behind the ``qha`` command."""

from .loader import load_config
from .registry import get_experiment, registered
from .runner import run, suite
from .writer import write_report
