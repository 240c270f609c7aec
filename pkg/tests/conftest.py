from pathlib import Path

import pytest

from helpers import fixture_store, handle_map


@pytest.fixture(scope="session")
def fx():
    return fixture_store()


@pytest.fixture(scope="session")
def h(fx):
    return handle_map(fx)


@pytest.fixture(scope="session")
def fixture_nt() -> Path:
    return Path(__file__).parent / "data" / "fixture.nt"
