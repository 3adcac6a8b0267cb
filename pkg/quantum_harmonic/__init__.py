"""Quantum harmonic analysis on a truncated Fock space."""

__version__ = "0.1.0"
