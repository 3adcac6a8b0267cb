import numpy as np
import pytest

from quantum_harmonic.api.serializers import validate_config
from quantum_harmonic.models import FockSpec, Grid, OperatorMatrix


@pytest.fixture
def spec16():
    return FockSpec(16)


@pytest.fixture
def spec32():
    return FockSpec(32)


@pytest.fixture
def spec64():
    return FockSpec(64)


@pytest.fixture
def grid():
    return Grid(10.0, 128)


@pytest.fixture
def small_grid():
    return Grid(10.0, 64)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def vacuum16(spec16):
    return OperatorMatrix.rank_one(spec16, 0, 0)


@pytest.fixture
def small_config(tmp_path):
    """Default tolerances on shrunken families; reports go to tmp_path."""
    return validate_config(
        {
            "seed": 11,
            "families": {
                "ccr_pairs": 4,
                "parity_points": 4,
                "shift_count": 24,
                "operators": {"count": 2, "rank": 2, "dim": 16},
                "index": {"dims": [96]},
                "index_dim": 64,
                "windings": [1, 2],
                "even_indices": [2, 0],
                "congruence_ks": [3],
                "modulation_dim": 48,
                "localization_points": 5,
                "twisted_pairs": 2,
                "twisted_points": 32,
                "smooth_symbols": 2,
                "audit_dim": 16,
            },
            "output": {"dir": str(tmp_path / "reports")},
        }
    )
