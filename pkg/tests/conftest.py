from pathlib import Path

import pytest
from hypothesis import settings

from symplab.exactalg import GradedAlgebra

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def ring():
    return GradedAlgebra({"A": 2, "X": 4, "Y": 4})


@pytest.fixture
def schema_path():
    return ROOT / "schemas" / "envelope.json"


@pytest.fixture
def golden_dir():
    return Path(__file__).resolve().parent / "golden"
