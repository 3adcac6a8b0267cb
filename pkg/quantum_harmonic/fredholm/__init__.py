"""Fredholm index estimation for banded Fock-space operators."""

from .band import band_profile
from .experiments import (
    congruence_experiment,
    corollary_witness,
    counterexample_report,
    index_parity_experiment,
)
from .index import block_index, index_deficiency, index_winding
