"""Truncated Fock space: basis, kernels, Weyl operators and parity."""

from .basis import (
    coherent_state,
    coherent_tail,
    kernel_overlap,
    log_monomial_norm,
    monomial_norm,
)
from .linalg import LinalgSummary, linalg_utilities, numerical_rank
from .operators import (
    modulate_gamma,
    parity,
    parity_rotation,
    rotate_point,
    rotation_intertwining_defect,
    shift_alpha,
    tensor_product,
)
from .weyl import (
    ccr_defect,
    ccr_phase,
    weyl_compression,
    weyl_matrix_elements,
    weyl_operator,
    weyl_truncation_error,
)
