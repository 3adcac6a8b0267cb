import pytest
from rest_framework import exceptions

from core.errors import all_errors
from core.errors.client.main import bad_config
from kernel.errors.custom_error import (
    custom_exception_handler,
    exception_to_error_type,
    flatten_validation_detail,
)
from quantum_harmonic import errors
from quantum_harmonic.errors import (
    ConventionError,
    TruncationError,
    UnknownSymbolError,
)


def test_descriptor_representation():
    data = bad_config.to_representation()
    assert data == {
        "code": 4001,
        "title": "Bad Config",
        "detail": "Configuration failed validation",
        "status": 2,
        "field": "grid.N",
    }


def test_every_error_type_has_a_descriptor():
    titles = {
        error.title.lower().replace(" ", "_") for error in all_errors
    }
    for name in errors.__all__:
        cls = getattr(errors, name)
        if cls is not errors.NumericalError:
            assert cls.custom_error_type in titles, name


def test_codes_are_unique_and_statuses_match_families():
    codes = [error.code for error in all_errors]
    assert len(codes) == len(set(codes))
    for error in all_errors:
        assert error.status == (2 if error.code < 5000 else 3)


@pytest.mark.parametrize(
    "exc, kind, code",
    [
        (TruncationError("tail 1e-3", "z"), "truncation", 3),
        (ConventionError("no preset"), "convention", 3),
        (UnknownSymbolError("unknown symbol 'x'", "x"), "unknown_symbol", 2),
    ],
)
def test_handler_payload_for_domain_errors(exc, kind, code):
    payload = custom_exception_handler(exc, {"experiment": "index"})
    assert payload["type"] == kind
    assert payload["exit_code"] == code
    assert payload["messages"] == [exc.message]
    assert payload["context"] == {"experiment": "index"}
    assert payload["params"] == ([] if exc.param is None else [exc.param])


def test_unknown_symbol_str_is_its_message():
    message = "unknown symbol 'x'"
    assert str(UnknownSymbolError(message)) == message


def test_handler_flattens_validation_errors():
    exc = exceptions.ValidationError({"grid": {"N": ["not a power"]}})
    payload = custom_exception_handler(exc)
    assert payload["type"] == "validation_error"
    assert payload["params"] == ["grid.N"]
    assert payload["messages"] == ["not a power"]
    assert payload["exit_code"] == 2


def test_handler_reports_other_exceptions_as_internal():
    payload = custom_exception_handler(RuntimeError("boom"))
    assert payload["type"] == "internal_error"
    assert payload["exit_code"] == 1
    assert exception_to_error_type(KeyError("k")) == "internal_error"


def test_flatten_validation_detail_indexes_lists():
    detail = {"families": {"windings": [{"x": ["bad"]}, {}]}, "seed": "no"}
    flat = flatten_validation_detail(detail)
    assert flat == {
        "families.windings[0].x": ["bad"],
        "seed": ["no"],
    }
