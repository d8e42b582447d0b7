"""Prime generation, caching, persistence, and smooth numbers."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasum import primes
from zetasum.primes import PrimeCache, nth_prime, primes_up_to, smallest_prime_factor, smooth_numbers


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def trial_division_primes(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if trial_division_is_prime(n)]


@pytest.fixture
def cache():
    return PrimeCache()


def test_primes_up_to_trivial(cache):
    assert primes_up_to(10, cache) == [2, 3, 5, 7]
    assert primes_up_to(1, cache) == []
    assert primes_up_to(0, cache) == []
    assert primes_up_to(2, cache) == [2]


def test_primes_up_to_100_matches_trial_division(cache):
    got = primes_up_to(100, cache)
    assert got == trial_division_primes(100)
    assert len(got) == 25
    assert got[-1] == 97


def test_primes_up_to_larger_range_matches_trial_division(cache):
    assert primes_up_to(3000, cache) == trial_division_primes(3000)


def test_nth_prime(cache):
    assert nth_prime(1, cache) == 2
    assert nth_prime(4, cache) == 7
    assert nth_prime(25, cache) == 97
    with pytest.raises(ValueError):
        nth_prime(0, cache)


def test_nth_prime_agrees_with_primes_up_to(cache):
    listed = primes_up_to(1000, cache)
    for k in (1, 2, 10, len(listed)):
        assert nth_prime(k, cache) == listed[k - 1]


@given(limit=st.integers(min_value=0, max_value=2000))
@settings(max_examples=40, deadline=None)
def test_primes_up_to_complete_and_sound(limit):
    got = primes_up_to(limit)
    assert got == trial_division_primes(limit)


def test_cache_grows_monotonically(cache):
    cache.extend_to(50)
    first = cache.primes.tolist()
    limit_before = cache.source_limit
    cache.extend_to(5000)
    assert cache.primes.tolist()[: len(first)] == first
    assert cache.source_limit >= 5000 > limit_before
    arr = cache.primes
    assert arr[0] == 2
    assert all(a < b for a, b in zip(arr.tolist(), arr.tolist()[1:]))


def test_smallest_prime_factor(cache):
    assert smallest_prime_factor(12, cache) == 2
    assert smallest_prime_factor(35, cache) == 5
    assert smallest_prime_factor(97, cache) == 97
    for bad in (1, 0, -7):
        with pytest.raises(ValueError):
            smallest_prime_factor(bad, cache)


@given(n=st.integers(min_value=2, max_value=10**6))
@settings(max_examples=60, deadline=None)
def test_smallest_prime_factor_divides_and_is_minimal(n):
    p = smallest_prime_factor(n)
    assert n % p == 0
    assert trial_division_is_prime(p)
    for q in range(2, p):
        assert n % q != 0


def smooth_by_filtering(i: int, bound: int) -> list[int]:
    allowed = trial_division_primes(10**6)[:i]
    out = []
    for n in range(1, bound + 1):
        m = n
        for p in allowed:
            while m % p == 0:
                m //= p
        if m == 1:
            out.append(n)
    return out


def test_smooth_numbers_examples(cache):
    assert smooth_numbers(1, 8, cache) == [1, 2, 4, 8]
    assert smooth_numbers(2, 10, cache) == [1, 2, 3, 4, 6, 8, 9]
    assert smooth_numbers(1, 1, cache) == [1]


@pytest.mark.parametrize("i,bound", [(1, 300), (2, 500), (3, 500), (4, 210)])
def test_smooth_numbers_match_filtering(cache, i, bound):
    assert smooth_numbers(i, bound, cache) == smooth_by_filtering(i, bound)


def test_smooth_numbers_membership_follows_spf_chain(cache):
    bound, i = 400, 3
    p_i = nth_prime(i, cache)
    members = set(smooth_numbers(i, bound, cache))
    for n in range(1, bound + 1):
        m = n
        while m > 1:
            p = smallest_prime_factor(m, cache)
            if p > p_i:
                break
            m //= p
        assert (n in members) == (m == 1)


def test_persistence_roundtrip(tmp_path):
    path = tmp_path / "primes.txt"
    writer = PrimeCache(str(path))
    nth_prime(25, writer)
    lines = path.read_text().splitlines()
    values = [int(x) for x in lines]
    assert values[0] == 2
    assert values == sorted(set(values))
    assert 97 in values

    reader = PrimeCache(str(path))
    assert reader.primes.tolist() == writer.primes.tolist()
    assert primes_up_to(100, reader) == trial_division_primes(100)


def test_corrupt_cache_rejected(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("4\n3\n")
    with pytest.raises(ValueError):
        PrimeCache(str(bad))
    unordered = tmp_path / "unordered.txt"
    unordered.write_text("2\n7\n5\n")
    with pytest.raises(ValueError):
        PrimeCache(str(unordered))


def test_env_var_controls_default_cache(tmp_path, monkeypatch):
    path = tmp_path / "env_cache.txt"
    monkeypatch.setenv(primes.ENV_CACHE_PATH, str(path))
    primes.reset_default_cache()
    try:
        assert nth_prime(10) == 29
        assert path.exists()
        assert int(path.read_text().splitlines()[0]) == 2
    finally:
        primes.reset_default_cache()


def test_default_cache_in_memory_without_env(monkeypatch):
    monkeypatch.delenv(primes.ENV_CACHE_PATH, raising=False)
    primes.reset_default_cache()
    try:
        assert primes.default_cache().path is None
    finally:
        primes.reset_default_cache()
