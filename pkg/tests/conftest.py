import pytest

from dmcensus import build_census, load_catalog, oracle_census


@pytest.fixture(scope="session")
def census_d2():
    """Memoized analytic censuses for d=2, shared across the suite."""
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = build_census(p, 2)
        return cache[p]

    return get


@pytest.fixture(scope="session")
def oracle_d2():
    """Memoized word-oracle censuses for d=2."""
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = oracle_census(p, 2)
        return cache[p]

    return get


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()
