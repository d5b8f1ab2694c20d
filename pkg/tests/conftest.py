import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

DATA = Path(__file__).parent / "data" / "oracle_values.json"


@pytest.fixture(scope="session")
def oracle():
    return json.loads(DATA.read_text())
