import pytest

from tilebalance.catalog import list_catalog, load_template
from tilebalance.periodic import build_periodic_tiling

_CACHE = {}


def catalog_names():
    return [name for name, *_ in list_catalog()]


def get_tiling(name):
    if name not in _CACHE:
        _CACHE[name] = build_periodic_tiling(load_template(name))
    return _CACHE[name]


@pytest.fixture(scope="session")
def all_names():
    return catalog_names()
