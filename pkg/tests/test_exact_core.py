import math
import random
from fractions import Fraction

import pytest

from torelli_euler.exact_core import (
    RationalInterval,
    is_probable_prime,
    p_adic_valuation,
    pi_interval,
    rising_factorial_ratio,
)
from torelli_euler.verify import PI_REFERENCE


# --- rising_factorial_ratio -------------------------------------------------


@pytest.mark.parametrize(
    "a,b,expected",
    [(5, 5, 1), (7, 4, 210), (5, 2, 60), (0, 0, 1), (1, 0, 1)],
)
def test_rising_factorial_ratio_values(a, b, expected):
    assert rising_factorial_ratio(a, b) == expected


def test_rising_factorial_ratio_rejects_bad_arguments():
    with pytest.raises(ValueError):
        rising_factorial_ratio(4, 7)
    with pytest.raises(ValueError):
        rising_factorial_ratio(4, -1)


def test_rising_factorial_ratio_times_b_factorial_is_a_factorial():
    rng = random.Random(7)
    for a in range(0, 201):
        for b in {0, a, a // 2, rng.randint(0, a) if a else 0}:
            assert rising_factorial_ratio(a, b) * math.factorial(b) == math.factorial(a)


# --- p-adic valuation --------------------------------------------------------


def test_p_adic_valuation_examples():
    assert p_adic_valuation(12, 2) == 2
    assert p_adic_valuation(1, 5) == 0
    # 2730 = 2 * 3 * 5 * 7 * 13 (trial-division oracle), 691 is prime
    factors = []
    n = 2730
    d = 2
    while n > 1:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1
    assert factors == [2, 3, 5, 7, 13]
    assert p_adic_valuation(Fraction(-691, 2730), 7) == -1
    assert p_adic_valuation(Fraction(-691, 2730), 691) == 1
    assert p_adic_valuation(Fraction(-691, 2730), 11) == 0


def test_p_adic_valuation_rejects_zero_and_nonprime():
    with pytest.raises(ValueError):
        p_adic_valuation(Fraction(0), 5)
    for bad in (0, 1, 4, -3, 691 * 3617):
        with pytest.raises(ValueError):
            p_adic_valuation(Fraction(1, 2), bad)


def test_p_adic_valuation_is_additive():
    rng = random.Random(2024)
    primes = (2, 3, 5, 7, 691)
    for _ in range(200):
        a = Fraction(rng.randint(-10**6, 10**6) or 1, rng.randint(1, 10**6))
        b = Fraction(rng.randint(-10**6, 10**6) or 1, rng.randint(1, 10**6))
        for p in primes:
            assert p_adic_valuation(a * b, p) == p_adic_valuation(a, p) + p_adic_valuation(b, p)


def test_is_probable_prime_against_sieve():
    limit = 10000
    sieve = [False, False] + [True] * (limit - 1)
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            for j in range(i * i, limit + 1, i):
                sieve[j] = False
    for n in range(limit + 1):
        assert is_probable_prime(n) == sieve[n], n


# --- rational reduction invariants -------------------------------------------


def test_fractions_stay_reduced_with_positive_denominator():
    rng = random.Random(5)
    for _ in range(300):
        a = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        b = Fraction(rng.randint(-999, 999) or 1, rng.randint(1, 999))
        for value in (a + b, a - b, a * b, a / b):
            assert math.gcd(value.numerator, value.denominator) == 1
            assert value.denominator >= 1


# --- interval arithmetic ------------------------------------------------------


def _random_interval(rng):
    a = Fraction(rng.randint(-400, 400), rng.randint(1, 50))
    b = a + Fraction(rng.randint(0, 300), rng.randint(1, 50))
    return RationalInterval(a, b)


def _points(interval):
    w = interval.width
    return [interval.lo + w * t for t in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))]


def test_interval_rejects_reversed_endpoints():
    with pytest.raises(ValueError):
        RationalInterval(Fraction(1), Fraction(0))


def test_interval_operations_enclose_exact_results():
    rng = random.Random(11)
    for _ in range(150):
        u = _random_interval(rng)
        v = _random_interval(rng)
        for x in _points(u):
            for y in _points(v):
                assert (u + v).contains(x + y)
                assert (u - v).contains(x - y)
                assert (u * v).contains(x * y)
                if not v.contains(0):
                    assert (u / v).contains(x / y)
        for n in (0, 1, 2, 3, 7):
            for x in _points(u):
                assert (u**n).contains(x**n)
        scalar = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        for x in _points(u):
            assert u.scale(scalar).contains(x * scalar)


def test_interval_division_by_zero_interval_is_an_error():
    u = RationalInterval(Fraction(1), Fraction(2))
    z = RationalInterval(Fraction(-1), Fraction(1))
    with pytest.raises(ZeroDivisionError):
        u / z
    with pytest.raises(ZeroDivisionError):
        z.reciprocal()


def test_interval_outward_rounding_encloses_and_stays_tight():
    rng = random.Random(13)
    for _ in range(100):
        u = _random_interval(rng)
        rounded = u.outward(48)
        assert rounded.encloses(u)
        if u.lo != 0:
            assert abs(rounded.lo - u.lo) <= abs(u.lo) * Fraction(1, 2**46)
        if u.hi != 0:
            assert abs(rounded.hi - u.hi) <= abs(u.hi) * Fraction(1, 2**46)


# --- pi ------------------------------------------------------------------------


def test_pi_interval_contains_reference_and_meets_width():
    for precision in (16, 64, 128):
        enclosure = pi_interval(precision)
        assert enclosure.width <= Fraction(1, 2 ** (precision - 1))
        # The reference is pi truncated at 50 digits, so it sits just below
        # pi; containment still must hold at every tested precision.
        assert enclosure.lo < PI_REFERENCE < enclosure.hi
    at16 = pi_interval(16)
    assert at16.lo < Fraction(314159265, 10**8) < at16.hi


def test_pi_interval_nesting():
    assert pi_interval(16).encloses(pi_interval(64))
    assert pi_interval(64).encloses(pi_interval(128))


def test_pi_interval_rejects_tiny_precision():
    with pytest.raises(ValueError):
        pi_interval(4)
