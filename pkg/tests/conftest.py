import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    # keep table caching enabled but point it away from the user's real cache
    os.environ["FISHBURN_CACHE"] = str(tmp_path_factory.mktemp("tables"))
    yield
