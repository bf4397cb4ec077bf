"""Test the multiple cache and its Redis ladder store."""
import json

import pytest

from quartic import config
from quartic.cache import LadderStore, MultipleCache, cache_stats, decode_point, encode_point, ladder_key
from quartic.curves.curve import INFINITY, Curve, CurvePoint
from quartic.errors import InputOffCurve

K7 = Curve(144, 3456)
SEED = CurvePoint.affine(4, -64)
K2 = Curve(4, 16)
K2_SEED = CurvePoint.affine("1/4", "-33/8")


class ListClient:
    """Just the Redis list commands the ladder store uses."""

    def __init__(self):
        self.lists = {}
        self.ttls = {}

    def llen(self, key):
        return len(self.lists.get(key, []))

    def lindex(self, key, index):
        items = self.lists.get(key, [])
        try:
            return items[index]
        except IndexError:
            return None

    def rpush(self, key, *values):
        self.lists.setdefault(key, []).extend(values)
        return len(self.lists[key])

    def expire(self, key, ttl):
        self.ttls[key] = ttl
        return True

    def keys(self, pattern):
        prefix = pattern.rstrip("*")
        return [key for key in self.lists if key.startswith(prefix)]

    def delete(self, *keys):
        return sum(1 for key in keys if self.lists.pop(key, None) is not None)


class DownClient:
    def __getattr__(self, name):
        def fail(*args, **kwargs):
            raise ConnectionError("connection refused")

        return fail


def test_ladder_matches_scalar_mul(fresh_cache):
    for n in (3, 1, 5, 2):
        assert fresh_cache.get(K7, SEED, n) == K7.scalar_mul(n, SEED)


def test_hits_and_misses(fresh_cache):
    fresh_cache.get(K7, SEED, 4)
    fresh_cache.get(K7, SEED, 2)
    fresh_cache.get(K7, SEED, 6)
    stats = cache_stats.get_stats()
    assert stats["hits"] == 1
    assert stats["misses"] == 2
    assert stats["total_requests"] == 3
    assert stats["hit_rate_percent"] == 33.33


def test_eviction(fresh_cache):
    cache = MultipleCache(max_entries=1)
    cache.get(K7, SEED, 1)
    cache.get(Curve(-36, 0), CurvePoint.affine(12, 36), 1)
    assert cache_stats.evictions == 1
    cache.get(K7, SEED, 1)
    assert cache_stats.get_stats()["hits"] == 0


def test_rejects_bad_input(fresh_cache):
    with pytest.raises(InputOffCurve):
        fresh_cache.get(K7, CurvePoint.affine(4, 64 + 1), 1)
    with pytest.raises(ValueError):
        fresh_cache.get(K7, SEED, 0)


def test_store_disabled_without_host(monkeypatch):
    monkeypatch.setattr(config, "REDIS_HOST", None)
    store = LadderStore()
    assert not store.enabled
    assert store.length("anything") is None
    assert store.clear_all() == 0


def test_point_encoding():
    assert ladder_key(K2, K2_SEED) == "quartic:ladder:4:16:1/4:-33/8"
    assert json.loads(encode_point(K2_SEED)) == ["1/4", "-33/8"]
    assert decode_point(encode_point(K2_SEED)) == K2_SEED
    assert decode_point(encode_point(INFINITY)) == INFINITY


def test_ladders_in_redis(fresh_cache):
    client = ListClient()
    cache = MultipleCache(store=LadderStore(client=client, ttl=60))
    assert cache.get(K7, SEED, 3) == K7.scalar_mul(3, SEED)
    key = ladder_key(K7, SEED)
    assert client.lists[key] == [encode_point(K7.scalar_mul(n, SEED)) for n in (1, 2, 3)]
    assert client.ttls[key] == 60
    assert cache.get(K7, SEED, 2) == K7.double(SEED)
    assert cache.get(K7, SEED, 5) == K7.scalar_mul(5, SEED)
    assert len(client.lists[key]) == 5
    assert (cache_stats.hits, cache_stats.misses) == (1, 2)


def test_redis_ladders_are_shared(fresh_cache):
    client = ListClient()
    MultipleCache(store=LadderStore(client=client)).get(K2, K2_SEED, 4)
    cache_stats.reset()
    other = MultipleCache(store=LadderStore(client=client))
    assert other.get(K2, K2_SEED, 4) == K2.scalar_mul(4, K2_SEED)
    assert (cache_stats.hits, cache_stats.misses) == (1, 0)
    other.clear_all()
    assert client.lists == {}


def test_redis_failure_falls_back(fresh_cache):
    store = LadderStore(client=DownClient())
    cache = MultipleCache(store=store)
    assert cache.get(K7, SEED, 2) == K7.double(SEED)
    assert not store.enabled
    assert cache_stats.errors == 1
    assert cache.get(K7, SEED, 2) == K7.double(SEED)
