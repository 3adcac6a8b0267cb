"""Experiment runners; importing this package registers all of them."""

from . import fock_core, fredholm, parity, phase_transforms, quantize

__all__ = ["fock_core", "fredholm", "parity", "phase_transforms", "quantize"]
