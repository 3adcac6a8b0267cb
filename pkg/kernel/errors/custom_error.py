"""Custom errors base and error handling."""

from abc import ABCMeta

from rest_framework import exceptions


class ErrorBase(Exception, metaclass=ABCMeta):
    """Base class for custom errors.

    Subclasses set ``custom_error_type`` (a stable machine-readable tag)
    and ``exit_code`` (the process status the CLI returns for them).
    """

    custom_error_type = "error"
    exit_code = 1

    def __init__(self, message, param=None):
        super().__init__(message)
        self.message = message
        self.param = param


def exception_to_error_type(exc):
    """Returns the type of an exception."""
    if isinstance(exc, exceptions.ValidationError):
        return "validation_error"

    if isinstance(exc, ErrorBase):
        return exc.custom_error_type

    return "internal_error"


def custom_exception_handler(exc, context=None):
    """
    Returns a JSON-able payload describing any given exception.
    `ErrorBase` errors keep their message and parameter, DRF validation
    errors are flattened into field paths, anything else is reported as an
    internal error. ``context`` (experiment name, config path, ...) is
    echoed so failures can be traced back to the run that raised them.
    """
    params = []

    if isinstance(exc, ErrorBase):
        if exc.param is not None:
            params = [exc.param]
        messages = [exc.message]
        exit_code = exc.exit_code
    elif isinstance(exc, exceptions.ValidationError):
        flat = flatten_validation_detail(exc.detail)
        params = list(flat.keys())
        messages = [", ".join(x) for x in flat.values()]
        exit_code = 2
    else:
        messages = [str(exc)]
        exit_code = 1

    return {
        "type": exception_to_error_type(exc),
        "params": params,
        "messages": messages,
        "context": dict(context or {}),
        "exit_code": exit_code,
    }


def flatten_validation_detail(detail, prefix=""):
    """Flattens nested DRF error details into ``{"a.b": [msgs]}``."""
    flat = {}
    if isinstance(detail, dict):
        for key, value in detail.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            flat.update(flatten_validation_detail(value, path))
    elif isinstance(detail, list) and detail and not all(
        isinstance(item, str) for item in detail
    ):
        for index, value in enumerate(detail):
            path = f"{prefix}[{index}]"
            flat.update(flatten_validation_detail(value, path))
    else:
        items = detail if isinstance(detail, list) else [detail]
        flat[prefix or "non_field_errors"] = [str(item) for item in items]
    return flat
