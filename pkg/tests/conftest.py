from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from laptree.enumeration import enumerate_free_trees

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


_TREE_CACHE: dict[int, list] = {}


def trees_of_order(n: int) -> list:
    """Session-wide cache of the free tree enumeration, shared by tests."""
    if n not in _TREE_CACHE:
        _TREE_CACHE[n] = list(enumerate_free_trees(n))
    return _TREE_CACHE[n]


@pytest.fixture(scope="session")
def tree_cache():
    return trees_of_order
