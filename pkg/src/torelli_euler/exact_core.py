"""Exact arithmetic primitives shared by every other module.

Values are plain `fractions.Fraction` objects (arbitrary precision, always
reduced, denominator positive), re-exported here as `Rational`.  On top of
that the module provides factorial-ratio products, p-adic valuations, and a
small rational interval arithmetic whose only transcendental constant, pi,
enters through a certified enclosure.  No float ever participates in a
certified computation; floats are for display only.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Rational",
    "RationalInterval",
    "is_probable_prime",
    "p_adic_valuation",
    "pi_interval",
    "rising_factorial_ratio",
]

Rational = Fraction

_ZERO = Fraction(0)

# Strong pseudoprime witnesses; the test is deterministic for n < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_INT_STR_DIGITS = 2_000_000_000


def _allow_big_decimal_io() -> None:
    """Lift CPython's int<->str digit limit before exact decimal I/O.

    Bit-exact decimal rendering and parsing of very large integers is part
    of this library's contract (caches, JSON, decimal display); the default
    4300-digit cap, a mitigation for untrusted inputs, breaks tables past
    roughly B_2100.  Raised lazily, only when big-number I/O actually runs.
    """
    get_limit = getattr(sys, "get_int_max_str_digits", None)
    if get_limit is not None and get_limit() < _INT_STR_DIGITS:
        sys.set_int_max_str_digits(_INT_STR_DIGITS)


@lru_cache(maxsize=65536)
def is_probable_prime(n: int) -> bool:
    """Miller-Rabin primality check, deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rising_factorial_ratio(a: int, b: int) -> int:
    """a!/b! computed as the telescoped product (b+1)(b+2)...a.

    The empty product (a == b) is 1.  Rejects b > a: no formula in scope
    ever needs a falling ratio.
    """
    if b < 0:
        raise ValueError(f"arguments must be nonnegative, got b={b}")
    if b > a:
        raise ValueError(f"need b <= a, got a={a}, b={b}")
    return math.prod(range(b + 1, a + 1))


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_adic_valuation(q: Fraction | int, p: int) -> int:
    """v_p of a nonzero rational: v_p(numerator) - v_p(denominator).

    Primality of p is the caller's responsibility in principle; a cheap
    probable-prime check rejects obvious non-primes.
    """
    if not is_probable_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    q = Fraction(q)
    if q == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


def _floor_to_bits(q: Fraction, bits: int) -> Fraction:
    """Largest dyadic rational with about `bits` significant bits that is <= q."""
    if q == 0:
        return _ZERO
    shift = bits - (q.numerator.bit_length() - q.denominator.bit_length())
    if shift >= 0:
        return Fraction((q.numerator << shift) // q.denominator, 1 << shift)
    return Fraction((q.numerator // (q.denominator << -shift)) << -shift)


def _ceil_to_bits(q: Fraction, bits: int) -> Fraction:
    return -_floor_to_bits(-q, bits)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints.

    Every operation returns an enclosure of the exact image of its operands,
    so chained computations stay certified.  Division by an interval that
    contains zero is an error rather than an unbounded interval.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.lo, Fraction):
            object.__setattr__(self, "lo", Fraction(self.lo))
        if not isinstance(self.hi, Fraction):
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, q: Fraction | int) -> "RationalInterval":
        q = Fraction(q)
        return cls(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, q: Fraction | int) -> bool:
        return self.lo <= q <= self.hi

    def encloses(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        if not isinstance(other, RationalInterval):
            return NotImplemented
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    def scale(self, q: Fraction | int) -> "RationalInterval":
        """Multiply by an exact rational scalar."""
        q = Fraction(q)
        if q >= 0:
            return RationalInterval(self.lo * q, self.hi * q)
        return RationalInterval(self.hi * q, self.lo * q)

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval containing zero has no reciprocal")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: "RationalInterval") -> "RationalInterval":
        if not isinstance(other, RationalInterval):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, n: int) -> "RationalInterval":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"interval power wants a nonnegative integer, got {n}")
        if n == 0:
            return RationalInterval.point(1)
        candidates = [self.lo**n, self.hi**n]
        if self.lo < 0 < self.hi:
            candidates.append(_ZERO)
        return RationalInterval(min(candidates), max(candidates))

    def outward(self, bits: int) -> "RationalInterval":
        """Round endpoints outward to about `bits` significant bits.

        Keeps the enclosure valid while stopping endpoint denominators from
        blowing up in long interval products.
        """
        return RationalInterval(_floor_to_bits(self.lo, bits), _ceil_to_bits(self.hi, bits))


def _arctan_recip_interval(x: int, tail_bound: Fraction) -> RationalInterval:
    """Enclose arctan(1/x) for integer x >= 2.

    The Gregory series sum_k (-1)^k / ((2k+1) x^(2k+1)) alternates with
    strictly decreasing terms, so the truncation error is bounded by the
    first omitted term and the value lies between consecutive partial sums.
    Summation stops once that bound drops to `tail_bound`.
    """
    total = _ZERO
    k = 0
    power = x  # x^(2k+1)
    xx = x * x
    while True:
        term = Fraction(1, (2 * k + 1) * power)
        if term <= tail_bound:
            if k % 2 == 0:
                return RationalInterval(total, total + term)
            return RationalInterval(total - term, total)
        total = total + term if k % 2 == 0 else total - term
        k += 1
        power *= xx


@lru_cache(maxsize=64)
def pi_interval(precision: int) -> RationalInterval:
    """Enclosure of pi with width <= 2**(1 - precision).

    Machin's identity pi = 16 arctan(1/5) - 4 arctan(1/239), each arctangent
    enclosed via its alternating series.  Enclosures at higher precision are
    nested inside lower-precision ones because the partial-sum brackets of an
    alternating series are nested.
    """
    if precision < 8:
        raise ValueError(f"precision must be at least 8 bits, got {precision}")
    budget = Fraction(1, 1 << precision)
    a5 = _arctan_recip_interval(5, budget / 32)
    a239 = _arctan_recip_interval(239, budget / 8)
    return a5.scale(16) - a239.scale(4)
