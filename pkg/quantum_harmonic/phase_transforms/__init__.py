"""Phase-space Fourier transforms, Weyl quantization and the convention
audit."""

from .audit import convention_audit
from .checks import ideal_membership_suite, parity_conjugation_check
from .fourier_weyl import (
    dilation,
    fourier_weyl,
    inverse_fourier_weyl,
    regularized_fourier_weyl,
    regularized_trace,
)
from .quantization import (
    delta_alignment,
    fit_operator_fourier,
    modulation_covariance_defect,
    operator_fourier,
    shift_covariance_defect,
    weyl_quantize,
)
from .symplectic import symplectic_fourier
from .twisted import twisted_convolution, twisted_convolution_reference
