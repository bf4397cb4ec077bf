"""Cache of point multiples.

Solution streams, provenance replay and the k=2 (p, q) stream all walk the same
ladders P, 2P, 3P, ...; this cache keeps those ladders per (curve, seed). Ladders live
in Redis when QUARTIC_REDIS_HOST is set and reachable, and in process otherwise.
"""
import json
import logging
from collections import OrderedDict
from typing import Any, Dict, List, Optional, Tuple

from quartic import config
from quartic.arithmetic.exactnum import format_rational
from quartic.curves.curve import INFINITY, Curve, CurvePoint
from quartic.errors import InputOffCurve

logger = logging.getLogger(__name__)

# Try to import Redis, but make it optional
try:
    import redis
    REDIS_AVAILABLE = True
except ImportError:
    REDIS_AVAILABLE = False
    logger.debug("redis not installed; point ladders stay in process")

LadderKey = Tuple[Curve, CurvePoint]
KEY_PREFIX = "quartic:ladder"


class CacheStats:
    """Hit, miss, set, eviction and error counters for the multiple cache."""

    def __init__(self):
        self.hits = 0
        self.misses = 0
        self.sets = 0
        self.evictions = 0
        self.errors = 0

    def record_hit(self):
        """Record a cache hit."""
        self.hits += 1

    def record_miss(self):
        """Record a cache miss."""
        self.misses += 1

    def record_set(self):
        self.sets += 1

    def record_eviction(self):
        self.evictions += 1

    def record_error(self):
        """Record a Redis error."""
        self.errors += 1

    def get_stats(self) -> Dict:
        """Counters plus total requests and hit rate in percent."""
        total_requests = self.hits + self.misses
        hit_rate = (self.hits / total_requests * 100) if total_requests > 0 else 0
        return {
            "hits": self.hits,
            "misses": self.misses,
            "sets": self.sets,
            "evictions": self.evictions,
            "errors": self.errors,
            "total_requests": total_requests,
            "hit_rate_percent": round(hit_rate, 2),
        }

    def reset(self):
        """Reset all statistics."""
        self.__init__()


cache_stats = CacheStats()


def ladder_key(curve: Curve, seed: CurvePoint) -> str:
    return f"{KEY_PREFIX}:{curve.a}:{curve.b}:{format_rational(seed.x)}:{format_rational(seed.y)}"


def encode_point(p: CurvePoint) -> str:
    if p.is_infinity:
        return json.dumps(None)
    return json.dumps([format_rational(p.x), format_rational(p.y)])


def decode_point(raw: str) -> CurvePoint:
    value = json.loads(raw)
    if value is None:
        return INFINITY
    return CurvePoint.affine(*value)


class LadderStore:
    """Redis lists of JSON-encoded points, one list per ladder.

    Disabled when redis is not installed, no host is configured or the server does
    not answer; every operation then reports a miss.
    """

    def __init__(self, client: Optional[Any] = None, ttl: Optional[int] = None):
        self.redis_client = client
        self.ttl = ttl or config.LADDER_TTL
        self.enabled = client is not None
        if client is not None:
            return
        if not REDIS_AVAILABLE or not config.REDIS_HOST:
            return
        try:
            self.redis_client = redis.Redis(
                host=config.REDIS_HOST,
                port=config.REDIS_PORT,
                db=config.REDIS_DB,
                password=config.REDIS_PASSWORD,
                decode_responses=True,
                socket_connect_timeout=2,
                socket_timeout=2,
            )
            self.redis_client.ping()
            self.enabled = True
            logger.info(f"Redis ladder store connected: {config.REDIS_HOST}:{config.REDIS_PORT}")
        except Exception as e:
            logger.warning(f"Redis connection failed: {e}. Ladders stay in process.")
            self.redis_client = None
            self.enabled = False

    def _disable(self, action: str, e: Exception):
        logger.error(f"Redis {action} error: {e}. Falling back to the in-process ladders.")
        cache_stats.record_error()
        self.enabled = False

    def length(self, key: str) -> Optional[int]:
        """Stored ladder length, or None when the store is off."""
        if not self.enabled:
            return None
        try:
            return int(self.redis_client.llen(key))
        except Exception as e:
            self._disable("llen", e)
            return None

    def point(self, key: str, index: int) -> Optional[CurvePoint]:
        if not self.enabled:
            return None
        try:
            raw = self.redis_client.lindex(key, index)
        except Exception as e:
            self._disable("lindex", e)
            return None
        return None if raw is None else decode_point(raw)

    def append(self, key: str, points: List[CurvePoint]) -> bool:
        if not self.enabled or not points:
            return False
        try:
            self.redis_client.rpush(key, *[encode_point(p) for p in points])
            self.redis_client.expire(key, self.ttl)
            return True
        except Exception as e:
            self._disable("rpush", e)
            return False

    def clear_all(self) -> int:
        """Delete every ladder this package stored; returns the number of keys."""
        if not self.enabled:
            return 0
        try:
            keys = self.redis_client.keys(f"{KEY_PREFIX}:*")
            return self.redis_client.delete(*keys) if keys else 0
        except Exception as e:
            self._disable("delete", e)
            return 0


class MultipleCache:
    """Map from (curve, seed) to the ladder [seed, 2*seed, ...] computed so far.

    Backed by a LadderStore when it is enabled, else by an in-process LRU of at most
    max_entries ladders.
    """

    def __init__(self, max_entries: Optional[int] = None, store: Optional[LadderStore] = None):
        self.max_entries = max_entries or config.CACHE_SIZE
        self.store = store if store is not None else LadderStore()
        self._ladders: "OrderedDict[LadderKey, List[CurvePoint]]" = OrderedDict()

    def get(self, curve: Curve, seed: CurvePoint, n: int) -> CurvePoint:
        """Return n * seed (n >= 1), extending the stored ladder as needed.

        Args:
            curve: Curve the seed lives on
            seed: Affine point on the curve
            n: Multiple wanted

        Returns:
            The point n * seed
        """
        if n < 1:
            raise ValueError(f"multiple must be >= 1, got {n}")
        if self.store.enabled:
            p = self._get_stored(curve, seed, n)
            if p is not None:
                return p
        return self._get_local(curve, seed, n)

    def _get_stored(self, curve: Curve, seed: CurvePoint, n: int) -> Optional[CurvePoint]:
        key = ladder_key(curve, seed)
        length = self.store.length(key)
        if length is None:
            return None
        if length >= n:
            p = self.store.point(key, n - 1)
            if p is not None:
                cache_stats.record_hit()
            return p
        cache_stats.record_miss()
        if length == 0:
            if not curve.contains(seed):
                raise InputOffCurve(f"{seed} is not on {curve}")
            current, fresh = seed, [seed]
        else:
            current = self.store.point(key, length - 1)
            if current is None:
                return None
            fresh = []
        while length + len(fresh) < n:
            current = curve.add(current, seed)
            fresh.append(current)
        if not self.store.append(key, fresh):
            return None
        cache_stats.record_set()
        logger.debug(f"stored ladder for {seed} on {curve} extended to {n}")
        return current

    def _get_local(self, curve: Curve, seed: CurvePoint, n: int) -> CurvePoint:
        key = (curve, seed)
        ladder = self._ladders.get(key)
        if ladder is None:
            cache_stats.record_miss()
            if not curve.contains(seed):
                raise InputOffCurve(f"{seed} is not on {curve}")
            ladder = [seed]
            self._store(key, ladder)
        elif len(ladder) >= n:
            cache_stats.record_hit()
            self._ladders.move_to_end(key)
            return ladder[n - 1]
        else:
            cache_stats.record_miss()
            self._ladders.move_to_end(key)

        while len(ladder) < n:
            ladder.append(curve.add(ladder[-1], seed))
            cache_stats.record_set()
        logger.debug(f"ladder for {seed} on {curve} extended to {len(ladder)}")
        return ladder[n - 1]

    def _store(self, key: LadderKey, ladder: List[CurvePoint]):
        self._ladders[key] = ladder
        cache_stats.record_set()
        while len(self._ladders) > self.max_entries:
            self._ladders.popitem(last=False)
            cache_stats.record_eviction()

    def clear_all(self):
        """Drop every ladder, in process and in Redis."""
        self._ladders.clear()
        self.store.clear_all()


# Global cache instance
multiple_cache = MultipleCache()
