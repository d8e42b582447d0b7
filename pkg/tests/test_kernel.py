"""Complex primitives: power terms, reciprocal factors, singular lattice."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasum import kernel
from zetasum.kernel import (
    DEFAULT_SINGULAR_TOL,
    PowerOverflowError,
    SingularPointError,
    euler_factor,
    explicit_exclusion_point,
    explicit_exclusion_points,
    in_exclusion_set,
    power_term,
    prime_power_term,
    singular_point,
)
from zetasum.primes import first_primes

SMALL_PRIMES = first_primes(50).tolist()


def test_power_term_trivial_values():
    assert prime_power_term(2, 1) == 0.5
    assert prime_power_term(2, 0) == 1.0
    expected = float(Fraction(1, 9))
    got = prime_power_term(3, 2)
    assert got.imag == 0.0
    assert abs(got.real - expected) <= 1e-15 * expected


def test_power_term_rejects_bad_input():
    with pytest.raises(ValueError):
        prime_power_term(1, 2)
    with pytest.raises(ValueError):
        power_term(0, 2)
    with pytest.raises(ValueError):
        power_term(2, complex(float("nan"), 0))
    with pytest.raises(ValueError):
        power_term(2, complex(0, float("inf")))


def test_power_term_overflow_signals_with_prime():
    with pytest.raises(PowerOverflowError) as info:
        prime_power_term(99991, -80)
    assert info.value.prime == 99991


@given(
    p=st.sampled_from(SMALL_PRIMES),
    re=st.floats(min_value=-80, max_value=80),
    im=st.floats(min_value=-50, max_value=50),
)
@settings(max_examples=200)
def test_power_term_magnitude_is_real_power(p, re, im):
    if abs(re) * math.log(p) > 700:
        return
    got = prime_power_term(p, complex(re, im))
    expected = p ** -re
    assert abs(abs(got) - expected) <= 1e-14 * expected


@given(
    p=st.sampled_from(SMALL_PRIMES),
    re=st.floats(min_value=-20, max_value=20),
    im=st.floats(min_value=-100, max_value=100),
)
@settings(max_examples=200)
def test_power_term_conjugate_symmetry(p, re, im):
    s = complex(re, im)
    assert prime_power_term(p, s.conjugate()) == prime_power_term(p, s).conjugate()


def test_euler_factor_values():
    assert euler_factor(2, 1) == 2.0
    expected = float(Fraction(8, 7))
    got = euler_factor(2, 3)
    assert abs(got - expected) <= 1e-15 * expected


def test_euler_factor_singular_at_zero():
    with pytest.raises(SingularPointError) as info:
        euler_factor(2, 0)
    assert info.value.prime == 2
    assert info.value.gap == 0.0


def test_euler_factor_rejects_nonpositive_tol():
    with pytest.raises(ValueError):
        euler_factor(2, 3, tol=0.0)


@given(
    p=st.sampled_from(SMALL_PRIMES),
    re=st.floats(min_value=-3, max_value=5),
    im=st.floats(min_value=-20, max_value=20),
)
@settings(max_examples=200)
def test_euler_factor_inverts_one_minus_term(p, re, im):
    s = complex(re, im)
    try:
        f = euler_factor(p, s)
    except SingularPointError:
        return
    t = prime_power_term(p, s)
    assert abs(f * (1.0 - t) - 1.0) <= 1e-13


def test_in_exclusion_set_witness_examples():
    w = in_exclusion_set(0, 1)
    assert w is not None and (w.prime, w.k) == (2, 0) and w.distance == 0.0

    s = singular_point(2, 1)
    w = in_exclusion_set(s, 1)
    assert w is not None and (w.prime, w.k) == (2, 1)
    # direct evaluation confirms the factor really is singular there
    assert abs(prime_power_term(2, s) - 1.0) < DEFAULT_SINGULAR_TOL

    assert in_exclusion_set(2, 5) is None


def test_in_exclusion_set_full_lattice():
    for j in range(1, 11):
        p = SMALL_PRIMES[j - 1]
        for k in range(-100, 101):
            w = in_exclusion_set(singular_point(p, k), j)
            assert w is not None
            assert w.distance <= DEFAULT_SINGULAR_TOL


@given(
    re=st.floats(min_value=-5, max_value=5),
    im=st.floats(min_value=-50, max_value=50),
)
@settings(max_examples=100)
def test_in_exclusion_set_none_off_axis(re, im):
    if abs(re) <= DEFAULT_SINGULAR_TOL:
        return
    assert in_exclusion_set(complex(re, im), 10) is None


def test_witness_distance_within_tolerance_for_inscribed_points():
    tol = 1e-9
    for p in (2, 3, 5):
        ln_p = math.log(p)
        base = singular_point(p, 3)
        s = complex(0.5 * tol, base.imag + 0.3 * tol / ln_p)
        w = in_exclusion_set(s, 3, tol)
        assert w is not None
        assert w.distance <= tol * math.sqrt(1.0 + 1.0 / ln_p**2)


def test_in_exclusion_set_validates_arguments():
    with pytest.raises(ValueError):
        in_exclusion_set(0, 0)
    with pytest.raises(ValueError):
        in_exclusion_set(0, 1, tol=-1.0)


def test_explicit_exclusion_points_examples():
    pts = explicit_exclusion_points(1, range(0, 1))
    assert pts == [complex(0.0, math.pi / math.log(2))]
    pts = explicit_exclusion_points(1, range(-1, 0))
    assert pts == [complex(0.0, -math.pi / math.log(2))]


def test_explicit_point_is_not_singular():
    s = explicit_exclusion_point(2, 0)
    t = prime_power_term(2, s)
    assert abs(t + 1.0) <= 1e-12
    assert abs(1.0 - t) > 1.0  # far from the singular condition
    assert euler_factor(2, s) is not None  # does not raise


def test_explicit_points_hit_minus_one_across_grid():
    for j in range(1, 11):
        p = SMALL_PRIMES[j - 1]
        for k in range(-10, 11):
            s = explicit_exclusion_point(p, k)
            assert abs(prime_power_term(p, s) + 1.0) <= 1e-12


def test_explicit_points_ordering_and_count():
    pts = explicit_exclusion_points(3, range(-2, 3))
    assert len(pts) == 15
    regenerated = [
        explicit_exclusion_point(p, k)
        for p in (2, 3, 5)
        for k in range(-2, 3)
    ]
    assert pts == regenerated


def test_as_complex_passthrough():
    assert kernel.as_complex(2) == complex(2.0, 0.0)
    assert kernel.as_complex(1.5 - 2j) == 1.5 - 2j
