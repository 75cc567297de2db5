import functools

import pytest

from gtrscodes import GaloisField, quadratic_extension, sweep_constructions


@functools.lru_cache(maxsize=None)
def field_q2(q: int) -> GaloisField:
    """Shared GF(q^2) instances (table construction is the slow part)."""
    return quadratic_extension(q)


@functools.lru_cache(maxsize=None)
def sweep_cache(q: int):
    return sweep_constructions(field_q2(q))


@pytest.fixture(scope="session")
def gf7():
    return GaloisField(7)


@pytest.fixture(scope="session")
def gf49():
    return field_q2(7)


@pytest.fixture(scope="session")
def gf9():
    return field_q2(3)


@pytest.fixture(scope="session")
def gf25():
    return field_q2(5)
