"""Domain errors raised by the numerical modules and the experiment runner.

Each error maps onto a descriptor in ``core.errors`` through its
``custom_error_type`` so the CLI can report it uniformly.
"""

from kernel.errors.custom_error import ErrorBase


class InvalidSpecError(ErrorBase, ValueError):
    custom_error_type = "invalid_spec"
    exit_code = 2


class DimensionOverflowError(ErrorBase, ValueError):
    custom_error_type = "dimension_overflow"
    exit_code = 2


class ConfigValidationError(ErrorBase, ValueError):
    """Experiment configuration failed validation.

    ``param`` holds the dotted field path of the first failing field and
    ``errors`` the full ``{path: [messages]}`` mapping.
    """

    custom_error_type = "bad_config"
    exit_code = 2

    def __init__(self, message, param=None, errors=None):
        super().__init__(message, param)
        self.errors = errors or {}


class UnknownSymbolError(ErrorBase, KeyError):
    custom_error_type = "unknown_symbol"
    exit_code = 2

    def __str__(self):
        return self.message


class UnknownExperimentError(ErrorBase, KeyError):
    custom_error_type = "unknown_experiment"
    exit_code = 2

    def __str__(self):
        return self.message


class NumericalError(ErrorBase, ArithmeticError):
    """Base of failures detected by a numerical precondition or check."""

    custom_error_type = "numerical_error"
    exit_code = 3


class TruncationError(NumericalError):
    custom_error_type = "truncation"


class QuadratureError(NumericalError):
    custom_error_type = "quadrature"


class NotBandedError(NumericalError):
    custom_error_type = "not_banded"


class IllConditionedError(NumericalError):
    custom_error_type = "ill_conditioned"


class CurveThroughZeroError(NumericalError):
    custom_error_type = "curve_through_zero"


class AliasingError(NumericalError):
    custom_error_type = "aliasing"


class ExtrapolationError(NumericalError):
    custom_error_type = "extrapolation"


class ConventionError(NumericalError):
    custom_error_type = "convention"


__all__ = [
    "AliasingError",
    "ConfigValidationError",
    "ConventionError",
    "CurveThroughZeroError",
    "DimensionOverflowError",
    "ExtrapolationError",
    "IllConditionedError",
    "InvalidSpecError",
    "NotBandedError",
    "NumericalError",
    "QuadratureError",
    "TruncationError",
    "UnknownExperimentError",
    "UnknownSymbolError",
]
