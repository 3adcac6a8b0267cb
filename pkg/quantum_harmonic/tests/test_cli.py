import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

PARITY_CONFIG = "families:\n  parity_points: 2\n"


def _qha(*args):
    stdout, stderr = StringIO(), StringIO()
    call_command("qha", *args, stdout=stdout, stderr=stderr)
    return stdout.getvalue(), stderr.getvalue()


def test_errors_lists_every_code():
    out, _ = _qha("errors")
    lines = out.strip().splitlines()
    codes = [int(line.split()[0]) for line in lines]
    assert codes == sorted(codes)
    assert codes[0] == 4001
    assert 5008 in codes
    assert "exit 3" in lines[-1]


def test_experiment_writes_report(tmp_path):
    config = tmp_path / "parity.yaml"
    config.write_text(PARITY_CONFIG)
    out, _ = _qha(
        "parity-check", "--config", str(config), "--out", str(tmp_path)
    )
    assert "PASS parity_relation.dim" in out
    assert f"report: {tmp_path / 'parity-check.json'}" in out
    data = json.loads((tmp_path / "parity-check.json").read_text())
    assert data["experiment"] == "parity-check"
    assert data["passed"] is True
    assert (tmp_path / "parity-check__defects_dim.csv").exists()


def test_seed_override_is_echoed(tmp_path):
    config = tmp_path / "parity.yaml"
    config.write_text(PARITY_CONFIG)
    _qha(
        "parity-check",
        "--config",
        str(config),
        "--out",
        str(tmp_path),
        "--seed",
        "42",
    )
    data = json.loads((tmp_path / "parity-check.json").read_text())
    assert data["config"]["seed"] == 42


def test_invalid_config_exits_with_two(tmp_path):
    config = tmp_path / "bad.yaml"
    config.write_text("grid:\n  N: 100\n")
    stderr = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command(
            "qha",
            "parity-check",
            "--config",
            str(config),
            stdout=StringIO(),
            stderr=stderr,
        )
    assert excinfo.value.returncode == 2
    payload = json.loads(stderr.getvalue())
    assert payload["type"] == "bad_config"
    assert payload["params"] == ["grid.N"]
    assert payload["context"]["experiment"] == "parity-check"


def test_failed_verdict_exits_with_one(tmp_path):
    config = tmp_path / "strict.yaml"
    config.write_text(
        "tolerances:\n  ccr: 0.0\nfamilies:\n  ccr_pairs: 2\n"
    )
    stdout = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command(
            "qha",
            "ccr-check",
            "--config",
            str(config),
            "--out",
            str(tmp_path),
            stdout=stdout,
            stderr=StringIO(),
        )
    assert excinfo.value.returncode == 1
    assert "max_defect" in str(excinfo.value)
    assert "FAIL max_defect" in stdout.getvalue()
    assert (tmp_path / "ccr-check.json").exists()


def test_unknown_subcommand_is_rejected():
    with pytest.raises(CommandError):
        call_command("qha", "not-an-experiment", stdout=StringIO())
