"""Shared fixtures."""
import pytest

from quartic.cache import cache_stats, multiple_cache
from quartic.solutions.families import EMBEDDED_REGISTRY


@pytest.fixture
def by_id():
    """Embedded registry keyed by config id."""
    return {cfg.config_id: cfg for cfg in EMBEDDED_REGISTRY}


@pytest.fixture
def fresh_cache():
    multiple_cache.clear_all()
    cache_stats.reset()
    yield multiple_cache
    multiple_cache.clear_all()
    cache_stats.reset()
