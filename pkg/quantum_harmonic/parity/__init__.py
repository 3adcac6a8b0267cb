"""Even/odd operator algebra and phase-space continuity diagnostics."""

from .continuity import (
    c_minus_one_witness,
    continuity_modulus,
    module_witness,
    theta_rotation_witness,
    theta_shift_bound_check,
)
from .even_odd import (
    assemble_blocks,
    block_decompose,
    even_odd_split,
    make_even_with_index,
    symmetry_class,
    symmetry_defects,
)
from .intersection import fixed_eigenspace_complement, intersection_probe
from .localization import localization_profile, rank_one_localization
