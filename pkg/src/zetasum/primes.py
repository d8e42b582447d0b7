"""Prime generation and caching.

A single growing sieve backs every prime-indexed computation in this
package.  The cache extends itself on demand, at least doubling the sieved
range each time so repeated extension stays amortized, and can persist to a
flat text file with one decimal prime per line, ascending.  Point the
ZETA_PRIME_CACHE environment variable at a file to give the shared default
cache a backing store; without it the default cache is in-memory only.
"""

from __future__ import annotations

import math
import os
import tempfile

import numpy as np

ENV_CACHE_PATH = "ZETA_PRIME_CACHE"

_SEGMENT = 1 << 22


def _read_only(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class PrimeCache:
    """Monotonically growing, sorted sequence of primes.

    Growth is append-only and never rewrites published entries, so a reader
    holding a slice of :attr:`primes` always sees a consistent prefix; one
    writer plus any number of readers need no locking.

    Args:
        path: Optional backing file.  Loaded on construction if it exists,
            atomically rewritten after every extension.
    """

    def __init__(self, path: str | None = None):
        self.path = path
        self._primes = _read_only(np.empty(0, dtype=np.int64))
        self._source_limit = 1
        if path and os.path.exists(path):
            self._load(path)

    @property
    def primes(self) -> np.ndarray:
        """All cached primes, ascending, as a read-only int64 array."""
        return self._primes

    @property
    def source_limit(self) -> int:
        """Largest integer the sieve has covered; no prime <= this is missing."""
        return self._source_limit

    def __len__(self) -> int:
        return int(self._primes.size)

    # ------------------------------------------------------------------
    # persistence

    def _load(self, path: str) -> None:
        with open(path, "r", encoding="ascii") as fh:
            values = [int(line) for line in fh if line.strip()]
        arr = np.asarray(values, dtype=np.int64)
        if arr.size:
            if arr[0] != 2:
                raise ValueError(f"corrupt prime cache {path!r}: first entry is {arr[0]}, not 2")
            if arr.size > 1 and not (np.diff(arr) > 0).all():
                raise ValueError(f"corrupt prime cache {path!r}: entries not strictly increasing")
            self._primes = _read_only(arr)
            # Conservative: the file certainly covers everything up to its
            # last entry, even if it was generated with a larger limit.
            self._source_limit = int(arr[-1])

    def save(self) -> None:
        """Atomically rewrite the backing file (no-op without a path)."""
        if not self.path:
            return
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".primes.tmp")
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                for p in self._primes.tolist():
                    fh.write(f"{p}\n")
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    # ------------------------------------------------------------------
    # growth

    def extend_to(self, limit: int) -> None:
        """Ensure every prime <= limit is cached, sieving forward if needed."""
        limit = int(limit)
        if limit <= self._source_limit:
            return
        self._grow(max(limit, 2 * self._source_limit, 256))

    def _grow(self, target: int) -> None:
        root = math.isqrt(target)
        if root > self._source_limit:
            self._grow(root)
        if target <= self._source_limit:
            return
        base = self._primes[: int(np.searchsorted(self._primes, root, side="right"))]
        base_list = base.tolist()
        pieces = []
        lo = self._source_limit + 1
        while lo <= target:
            hi = min(lo + _SEGMENT - 1, target)
            flags = np.ones(hi - lo + 1, dtype=bool)
            for p in base_list:
                if p * p > hi:
                    break
                start = max(p * p, ((lo + p - 1) // p) * p)
                flags[start - lo :: p] = False
            pieces.append((np.flatnonzero(flags) + lo).astype(np.int64))
            lo = hi + 1
        if pieces:
            self._primes = _read_only(np.concatenate([self._primes, *pieces]))
        self._source_limit = target
        if self.path:
            self.save()

    def extend_to_count(self, count: int) -> None:
        """Ensure at least `count` primes are cached."""
        count = int(count)
        while len(self) < count:
            self.extend_to(self._estimate_limit(count))

    def _estimate_limit(self, count: int) -> int:
        # p_n < n(ln n + ln ln n + 2) for n >= 6; small margin, loop retries.
        if count < 6:
            return max(16, 2 * self._source_limit)
        x = float(count)
        est = int(x * (math.log(x) + math.log(math.log(x)) + 2.0)) + 16
        return max(est, 2 * self._source_limit)


_default_cache: PrimeCache | None = None


def default_cache() -> PrimeCache:
    """Shared cache used whenever an operation is not handed one explicitly."""
    global _default_cache
    if _default_cache is None:
        _default_cache = PrimeCache(os.environ.get(ENV_CACHE_PATH) or None)
    return _default_cache


def reset_default_cache() -> None:
    """Drop the shared cache; the next use re-reads ZETA_PRIME_CACHE."""
    global _default_cache
    _default_cache = None


def first_primes(count: int, cache: PrimeCache | None = None) -> np.ndarray:
    """First `count` primes, ascending, as a read-only int64 array."""
    if count < 0:
        raise ValueError("count must be >= 0")
    cache = cache if cache is not None else default_cache()
    cache.extend_to_count(count)
    return cache.primes[:count]


def primes_up_to(limit: int, cache: PrimeCache | None = None) -> list[int]:
    """All primes <= limit, ascending.  Empty for limit < 2.

    Args:
        limit: Inclusive upper bound.
        cache: Cache to query and grow; defaults to the shared one.
    """
    cache = cache if cache is not None else default_cache()
    limit = int(limit)
    if limit < 2:
        return []
    cache.extend_to(limit)
    cut = int(np.searchsorted(cache.primes, limit, side="right"))
    return cache.primes[:cut].tolist()


def nth_prime(k: int, cache: PrimeCache | None = None) -> int:
    """The k-th prime, 1-indexed: nth_prime(1) == 2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    cache = cache if cache is not None else default_cache()
    cache.extend_to_count(k)
    return int(cache.primes[k - 1])


def smallest_prime_factor(n: int, cache: PrimeCache | None = None) -> int:
    """Least prime dividing n (trial division against the cache).

    Raises:
        ValueError: for n < 2.
    """
    n = int(n)
    if n < 2:
        raise ValueError("n must be >= 2")
    cache = cache if cache is not None else default_cache()
    root = math.isqrt(n)
    cache.extend_to(root)
    cut = int(np.searchsorted(cache.primes, root, side="right"))
    for p in cache.primes[:cut].tolist():
        if n % p == 0:
            return p
    return n


def smooth_numbers(i: int, bound: int, cache: PrimeCache | None = None) -> list[int]:
    """All n <= bound whose prime factors lie among the first i primes.

    Includes n = 1 (the empty factorization).  Built by multiplying prime
    powers outward rather than filtering 1..bound, since smooth numbers are
    sparse at large bounds.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    bound = int(bound)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    values = [1]
    for p in first_primes(i, cache).tolist():
        if p > bound:
            break
        more = []
        for v in values:
            w = v * p
            while w <= bound:
                more.append(w)
                w *= p
        values.extend(more)
    values.sort()
    return values
