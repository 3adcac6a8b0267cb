from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose

from quantum_harmonic.api.serializers import validate_config
from quantum_harmonic.errors import ConfigValidationError
from quantum_harmonic.experiments import load_config
from quantum_harmonic.models import FockSpec, Grid
from quantum_harmonic.models.helper.enums import Experiment_Choices


def test_empty_config_takes_defaults():
    config = validate_config({})
    assert config.seed == 0
    assert config.spec == FockSpec(64)
    assert config.grid == Grid(10.0, 128)
    assert config.conventions.name == "audited"
    assert_allclose(config.conventions.haar_normalization, 1 / (2 * np.pi))
    assert config.tol("ccr") == 1e-8
    assert config.family("index")["dims"] == [200, 400]
    assert config.family("operators")["count"] == 20
    assert config.expected_failures == ()
    assert config.to_dict()["families"]["windings"] == [1, 2, 3]


def test_none_is_an_empty_config():
    assert validate_config(None).spec == FockSpec(64)


def test_tensor_spec():
    config = validate_config({"spec": {"n": 2, "D": 16}})
    assert config.spec == FockSpec.product(16, 16)


@pytest.mark.parametrize(
    "data, path",
    [
        ({"grid": {"M": 3}}, "grid.M"),
        ({"unknown": 1}, "unknown"),
        ({"grid": {"N": 100}}, "grid.N"),
        ({"spec": {"n": 3, "D": 64}}, "spec.D"),
        ({"families": {"operators": {"rank": 0}}}, "families.operators.rank"),
        ({"families": {"intersection_turns": [0.5]}},
         "families.intersection_turns"),
        ({"families": {"index": {"symbol": "nope:1"}}},
         "families.index.symbol"),
        ({"families": {"operators": {"support": 20}}},
         "families.operators.support"),
        ({"families": {"intersection_dim": 32}}, "families.intersection_dim"),
        ({"families": {"delta_eps": [0.1, 0.0]}}, "families.delta_eps"),
        ({"conventions": {"preset": "other"}}, "conventions.preset"),
        ({"expect_fail": ["not-an-experiment"]}, "expect_fail"),
    ],
)
def test_invalid_field_reports_dotted_path(data, path):
    with pytest.raises(ConfigValidationError) as excinfo:
        validate_config(data)
    assert excinfo.value.param.startswith(path)
    assert path in " ".join(excinfo.value.errors)


def test_haar_override_keeps_preset_phases():
    config = validate_config({"conventions": {"haar_normalization": 1.0}})
    assert config.conventions.haar_normalization == 1.0
    assert config.conventions.fourier_phase_scale == -0.5


def test_delta_eps_sorted_descending():
    config = validate_config({"families": {"delta_eps": [0.05, 0.2, 0.1]}})
    assert config.family("delta_eps") == [0.2, 0.1, 0.05]


def test_rng_streams_are_independent_and_reproducible():
    config = validate_config({"seed": 5})
    first = config.rng(Experiment_Choices.EVEN_ODD).standard_normal(4)
    again = config.rng(Experiment_Choices.EVEN_ODD).standard_normal(4)
    other = config.rng(Experiment_Choices.CCR_CHECK).standard_normal(4)
    assert_allclose(first, again)
    assert not np.allclose(first, other)


def test_load_config_reads_yaml_and_applies_overrides(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "seed: 3\n"
        "spec:\n"
        "  D: 32\n"
        "families:\n"
        "  windings: [1, 2]\n"
    )
    config = load_config(path, seed=9, out=tmp_path / "out")
    assert config.seed == 9
    assert config.spec == FockSpec(32)
    assert config.family("windings") == [1, 2]
    assert config.output_dir == str(tmp_path / "out")


def test_load_config_without_file_uses_defaults():
    assert load_config().spec == FockSpec(64)


@pytest.mark.parametrize(
    "text", ["seed: [unclosed\n", "- just\n- a list\n"]
)
def test_load_config_rejects_malformed_files(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigValidationError) as excinfo:
        load_config(path)
    assert excinfo.value.param == "config"


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigValidationError) as excinfo:
        load_config(tmp_path / "missing.yaml")
    assert excinfo.value.param == "config"


def test_load_config_empty_file(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("")
    assert load_config(path).seed == 0


@pytest.mark.parametrize(
    "name", ["default.yaml", "smoke.yaml", "negative_control.yaml"]
)
def test_shipped_configs_validate(name):
    config = load_config(Path(__file__).parents[2] / "configs" / name)
    assert config.spec.dim >= 32


def test_default_file_spells_out_the_defaults():
    path = Path(__file__).parents[2] / "configs" / "default.yaml"
    shipped = load_config(path).to_dict()
    defaults = validate_config({}).to_dict()
    assert shipped["tolerances"] == defaults["tolerances"]
    assert shipped["families"] == defaults["families"]
