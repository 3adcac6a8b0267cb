import csv
import json

import numpy as np
import pytest

from quantum_harmonic.api.serializers import validate_config
from quantum_harmonic.errors import (
    InvalidSpecError,
    UnknownExperimentError,
)
from quantum_harmonic.experiments import (
    get_experiment,
    registered,
    run,
    suite,
    write_report,
)
from quantum_harmonic.experiments.registry import EXPERIMENTS
from quantum_harmonic.experiments.writer import array_rows
from quantum_harmonic.models import ExperimentReport
from quantum_harmonic.models.helper.enums import Experiment_Choices

QUICK = {"families": {"ccr_pairs": 5, "parity_points": 3}}


def _read_csv(path):
    with path.open(newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def test_every_subcommand_is_registered():
    assert registered() == list(Experiment_Choices.values)


def test_unknown_experiment():
    with pytest.raises(UnknownExperimentError) as excinfo:
        get_experiment("nope")
    assert excinfo.value.param == "nope"
    assert "nope" in str(excinfo.value)


def test_run_records_config_and_conventions():
    report = run("ccr-check", validate_config(QUICK))
    assert report.passed, report.failed_verdicts()
    assert report.config["experiment_parameters"]["pairs"] == 5
    assert report.config["seed"] == 0
    assert report.conventions["tag"].startswith("audited(")
    assert report.conventions["in_effect"]["name"] == "audited"
    assert report.wall_time > 0.0
    assert report.arrays["defects"].shape == (5,)
    assert report.scalars["vacuum_expectation_defect"] < 1e-10


def test_run_is_reproducible_for_a_seed():
    config = validate_config({**QUICK, "seed": 7})
    first = run("ccr-check", config).arrays["defects"]
    again = run("ccr-check", config).arrays["defects"]
    np.testing.assert_array_equal(first, again)


def test_run_propagates_domain_errors(monkeypatch):
    def broken(config):
        raise InvalidSpecError("broken experiment", "spec")

    monkeypatch.setitem(EXPERIMENTS, "ccr-check", broken)
    with pytest.raises(InvalidSpecError):
        run("ccr-check", validate_config(QUICK))


def test_write_report_layout(tmp_path):
    report = ExperimentReport("demo")
    report.arrays["values"] = np.array([1.0 + 2.0j, 3.0])
    report.arrays["matrix"] = np.eye(2)
    report.rows["table"] = [
        {"m": 0, "value": 0.5j, "tags": [1, 2]},
        {"m": 1, "value": 1.0, "extra": "x"},
    ]
    report.check("small", 1e-9, 1e-8)
    paths = write_report(report, tmp_path / "out")
    names = sorted(path.name for path in paths)
    assert names == [
        "demo.json",
        "demo__matrix.csv",
        "demo__table.csv",
        "demo__values.csv",
    ]

    data = json.loads((tmp_path / "out" / "demo.json").read_text())
    assert data["passed"] is True
    assert data["arrays"]["values"][0] == {"re": 1.0, "im": 2.0}
    assert data["verdicts"][0]["comparison"] == "<"

    values = _read_csv(tmp_path / "out" / "demo__values.csv")
    assert list(values[0]) == ["index", "value_re", "value_im"]
    matrix = _read_csv(tmp_path / "out" / "demo__matrix.csv")
    assert list(matrix[0]) == ["row", "c0", "c1"]
    table = _read_csv(tmp_path / "out" / "demo__table.csv")
    assert table[0]["tags"] == "[1, 2]"
    assert table[1]["extra"] == "x"


def test_array_rows_rejects_three_dimensions():
    with pytest.raises(ValueError):
        array_rows(np.zeros((2, 2, 2)))


def test_suite_subset():
    aggregate, reports = suite(
        validate_config(QUICK), ["ccr-check", "parity-check"]
    )
    assert [r.experiment for r in reports] == ["ccr-check", "parity-check"]
    assert aggregate.passed, aggregate.failed_verdicts()
    assert [row["experiment"] for row in aggregate.rows["summary"]] == [
        "ccr-check",
        "parity-check",
    ]
    assert "ccr-check.max_defect" in {v.name for v in aggregate.verdicts}


def test_negative_control_that_passes_fails_the_suite():
    config = validate_config({**QUICK, "expect_fail": ["parity-check"]})
    aggregate, _ = suite(config, ["ccr-check", "parity-check"])
    assert not aggregate.passed
    failed = {v.name for v in aggregate.failed_verdicts()}
    assert failed == {
        "parity-check.fails_as_intended",
        "failures_as_intended",
    }


def test_negative_control_that_fails_passes_the_suite():
    config = validate_config(
        {
            **QUICK,
            "tolerances": {"ccr": 0.0},
            "expect_fail": ["ccr-check"],
        }
    )
    aggregate, reports = suite(config, ["ccr-check", "parity-check"])
    assert not reports[0].passed
    assert aggregate.passed, aggregate.failed_verdicts()


def test_suite_keeps_going_after_a_crash(monkeypatch):
    def crash(config):
        raise RuntimeError("boom")

    monkeypatch.setitem(EXPERIMENTS, "parity-check", crash)
    aggregate, reports = suite(
        validate_config(QUICK), ["ccr-check", "parity-check"]
    )
    assert reports[0].passed
    crashed = reports[1]
    assert [v.name for v in crashed.failed_verdicts()] == ["completed"]
    assert crashed.scalars["error"]["type"] == "internal_error"
    assert not aggregate.passed


@pytest.mark.slow
@pytest.mark.parametrize(
    "name",
    [
        "toeplitz-shift",
        "even-odd",
        "index",
        "index-parity",
        "congruence",
        "counterexample",
        "localization-scan",
        "intersection-probe",
    ],
)
def test_experiment_passes_on_small_config(small_config, name):
    report = run(name, small_config)
    assert report.passed, report.failed_verdicts()
    paths = write_report(report, small_config.output_dir)
    assert paths[0].name == f"{name}.json"
