"""Machine-checkable non-integrality certificates for e(m,n).

Three certificate forms, each validated at construction time so that an
unsound certificate cannot exist as an object:

  IntegerValue      e(m,n) reduced to denominator 1
  PrimeWitness      a prime with negative valuation in e(m,n)
  MagnitudeWitness  a certified bound 0 < e(m,n) < 1

plus an explicit Inconclusive outcome which is never silently conflated
with either answer.  The magnitude route goes through the certified
upper-bound product

  U(m,n) = (2m+n-1)!/(2m)! * prod_{k=1..m} (2pi)^(2k) / (2 (2k-1)!),

evaluated in rational interval arithmetic, together with its consecutive
ratio, which certifies that the bound sequence decreases below 1 from some
threshold on.  Exact certificates use exact rational arithmetic; witness
primes are chosen deterministically (691, then 3617, then the smallest
prime factor of the reduced denominator).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .bernoulli import BernoulliTable, CapacityError
from .exact_core import (
    RationalInterval,
    p_adic_valuation,
    pi_interval,
    rising_factorial_ratio,
)
from .euler_char import EmnQuery, e_mn
from .zeta_special import abs_zeta_one_minus_2k

__all__ = [
    "BoundSequence",
    "Certificate",
    "CertificateError",
    "DEEP_MAX_M",
    "Inconclusive",
    "IntegerValue",
    "MAX_WITNESSED_N",
    "MagnitudeWitness",
    "MonotoneReport",
    "PrimeWitness",
    "STRATEGIES",
    "ScanPoint",
    "ThresholdResult",
    "WITNESS_PRIMES",
    "WideRangeBoundForms",
    "certificate_from_exact",
    "certify_non_integrality",
    "monotone_decrease_check",
    "scan",
    "single_term_interval",
    "threshold_for_n",
    "upper_bound_interval",
    "wide_range_bound_forms",
    "wide_range_constant_form_threshold",
]

STRATEGIES = ("auto", "exact", "bound")

# Witness primes tried first: they sit in the denominator of e(m,n) through
# the numerators of B_12 and B_16 and cannot be cancelled by the integer
# prefactor while the window (2m, 2m+n-1] stays below them.
WITNESS_PRIMES = (691, 3617)

# Largest m and n for which that window stays below 3617 on the whole grid:
# 2*1470 + 677 - 1 = 3616.
DEEP_MAX_M = 1470
MAX_WITNESSED_N = 677

# Exact certificates by default stop at m = 200 (B_400); deep mode raises
# the limit to cover the full witnessed grid.  Quadratic big-integer cost.
DEFAULT_MAX_EXACT_M = 200


class CertificateError(ValueError):
    """A certificate failed its own soundness recheck at construction."""


@dataclass(frozen=True)
class IntegerValue:
    """e(m,n) is the integer `value`."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int):
            raise CertificateError(f"integer certificate holds {self.value!r}")


@dataclass(frozen=True)
class PrimeWitness:
    """v_p(value) < 0 for the prime p, so value is not an integer."""

    value: Fraction
    p: int
    valuation: int

    def __post_init__(self) -> None:
        recomputed = p_adic_valuation(self.value, self.p)
        if recomputed != self.valuation or recomputed >= 0:
            raise CertificateError(
                f"claimed v_{self.p} = {self.valuation}, recomputed {recomputed}"
            )


@dataclass(frozen=True)
class MagnitudeWitness:
    """0 < e(m,n) <= upper < 1, so e(m,n) is not an integer.

    Positivity comes from the factor structure of e(m,n); `upper` is the hi
    endpoint of a certified enclosure of the bound product.
    """

    upper: Fraction
    statement: str

    def __post_init__(self) -> None:
        if not 0 < self.upper < 1:
            raise CertificateError(f"magnitude witness needs 0 < upper < 1, got {self.upper}")


@dataclass(frozen=True)
class Inconclusive:
    """Neither certified; a distinct outcome, never an implicit answer."""

    reason: str


Certificate = Union[IntegerValue, PrimeWitness, MagnitudeWitness, Inconclusive]


def _smallest_prime_factor(n: int) -> int:
    # The smallest divisor > 1 of an integer is automatically prime.
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


def _witness_prime(denominator: int) -> int:
    for p in WITNESS_PRIMES:
        if denominator % p == 0:
            return p
    return _smallest_prime_factor(denominator)


def certificate_from_exact(value: Fraction) -> Certificate:
    """Certificate for an exactly known positive rational.

    Deterministic: 691 and 3617 are tried first, then the smallest prime
    factor of the reduced denominator by trial division.
    """
    if value.denominator == 1:
        return IntegerValue(int(value))
    p = _witness_prime(value.denominator)
    return PrimeWitness(value=value, p=p, valuation=p_adic_valuation(value, p))


# ---------------------------------------------------------------------------
# Certified upper-bound machinery.

# Extra significant bits kept through interval products; endpoint rounding
# is outward, so enclosures stay valid, only slightly wider.
_GUARD_BITS = 32


@lru_cache(maxsize=8192)
def single_term_interval(k: int, precision: int = 64) -> RationalInterval:
    """Enclosure of (2pi)^(2k) / (2 (2k-1)!), the k-th bound factor.

    The factor crosses 1 between k = 8 and k = 9, which is what makes the
    bound sequence eventually decrease.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    bits = max(precision, 16) + _GUARD_BITS
    two_pi = pi_interval(bits).scale(2)
    power = _pow_outward(two_pi, 2 * k, bits)
    return power.scale(Fraction(1, 2 * math.factorial(2 * k - 1))).outward(bits)


def _pow_outward(base: RationalInterval, n: int, bits: int) -> RationalInterval:
    # Binary exponentiation with outward rounding after each multiply, so
    # endpoint sizes stay near `bits` no matter how large n gets.
    result = RationalInterval.point(1)
    square = base
    while n:
        if n & 1:
            result = (result * square).outward(bits)
        n >>= 1
        if n:
            square = (square * square).outward(bits)
    return result


@dataclass(frozen=True)
class BoundSequence:
    """Certified enclosures of U(m,n) and of the ratio U(m+1,n)/U(m,n)."""

    m: int
    n: int
    value: RationalInterval
    ratio_next: RationalInterval

    def __post_init__(self) -> None:
        if self.value.lo <= 0:
            raise ValueError("the bound product is positive; enclosure must show it")


def _term_product(m: int, precision: int) -> RationalInterval:
    bits = max(precision, 16) + _GUARD_BITS
    product = RationalInterval.point(1)
    for k in range(1, m + 1):
        product = (product * single_term_interval(k, precision)).outward(bits)
    return product


def _ratio_next_interval(m: int, n: int, precision: int) -> RationalInterval:
    factor = Fraction((2 * m + n + 1) * (2 * m + n), (2 * m + 2) * (2 * m + 1))
    return single_term_interval(m + 1, precision).scale(factor)


def upper_bound_interval(m: int, n: int, precision: int = 64) -> BoundSequence:
    """Certified enclosure of U(m,n) together with the consecutive ratio."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    prefix = rising_factorial_ratio(2 * m + n - 1, 2 * m)
    return BoundSequence(
        m=m,
        n=n,
        value=_term_product(m, precision).scale(prefix),
        ratio_next=_ratio_next_interval(m, n, precision),
    )


@dataclass(frozen=True)
class ThresholdResult:
    """Smallest m0 with U(m0,n) certified below 1 and a certified decreasing tail.

    For every m >= m0 up to the cap, ratio_next < 1, so the bound sequence
    (and with it e(m,n)) stays below 1 on the whole checked tail.
    """

    n: int
    m_cap: int
    m_found: int | None
    chain: tuple[BoundSequence, ...]

    @property
    def found(self) -> bool:
        return self.m_found is not None


def threshold_for_n(n: int, m_cap: int = 64, precision: int = 64) -> ThresholdResult:
    """Scan m = 1..m_cap for the certified crossing of the bound below 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if m_cap < 1:
        raise ValueError(f"m_cap must be positive, got {m_cap}")
    sequences = [upper_bound_interval(m, n, precision) for m in range(1, m_cap + 1)]
    tail_start = m_cap + 1
    for m in range(m_cap, 0, -1):
        if sequences[m - 1].ratio_next.hi < 1:
            tail_start = m
        else:
            break
    for m in range(tail_start, m_cap + 1):
        if sequences[m - 1].value.hi < 1:
            return ThresholdResult(
                n=n, m_cap=m_cap, m_found=m, chain=tuple(sequences[m - 1 :])
            )
    return ThresholdResult(n=n, m_cap=m_cap, m_found=None, chain=())


# ---------------------------------------------------------------------------
# Certification strategies.


def _exact_certificate(m: int, n: int, table: BernoulliTable) -> Certificate:
    if table is None:
        raise ValueError("exact strategy needs a Bernoulli table")
    return certificate_from_exact(e_mn(EmnQuery(m, n), table))


def certify_non_integrality(
    m: int,
    n: int,
    strategy: str = "auto",
    table: BernoulliTable | None = None,
    *,
    precision: int = 64,
    max_exact_m: int = DEFAULT_MAX_EXACT_M,
) -> Certificate:
    """Certificate for e(m,n) under the chosen strategy.

    `exact` computes e(m,n) and reads the answer off its denominator;
    `bound` emits a magnitude witness when the certified U(m,n) < 1 and is
    otherwise inconclusive; `auto` tries the cheap certified bound first and
    falls back to exact within the configured limit.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    if strategy == "exact":
        return _exact_certificate(m, n, table)

    bound = upper_bound_interval(m, n, precision)
    if bound.value.hi < 1:
        return MagnitudeWitness(
            upper=bound.value.hi, statement=f"0 < e({m},{n}) < 1"
        )
    if strategy == "bound":
        return Inconclusive(
            f"certified upper bound for e({m},{n}) is not below 1"
        )
    if m <= max_exact_m and table is not None and 2 * m <= table.max_index:
        return _exact_certificate(m, n, table)
    return Inconclusive(
        f"upper bound for e({m},{n}) is not below 1 and exact evaluation "
        f"is unavailable (limit m <= {max_exact_m}, table required)"
    )


@dataclass(frozen=True)
class ScanPoint:
    m: int
    n: int
    certificate: Certificate

    @property
    def preferred_witness(self) -> bool | None:
        """For prime witnesses: whether p is one of the tried-first primes."""
        if isinstance(self.certificate, PrimeWitness):
            return self.certificate.p in WITNESS_PRIMES
        return None


def _validate_range(bounds: tuple[int, int], name: str) -> tuple[int, int]:
    lo, hi = bounds
    if lo < 1 or hi < lo:
        raise ValueError(f"{name} range must be nonempty with lo >= 1, got {bounds}")
    return lo, hi


def scan(
    m_range: tuple[int, int],
    n_range: tuple[int, int],
    strategy: str = "exact",
    table: BernoulliTable | None = None,
    *,
    precision: int = 64,
    max_exact_m: int = DEFAULT_MAX_EXACT_M,
) -> Iterator[ScanPoint]:
    """One certificate per grid point, yielded row by row.

    Row-incremental evaluation: for fixed m, e(m,n+1) = e(m,n) * (2m+n) and
    likewise for the bound product, so a full grid costs one rational
    update per point instead of one full product.  Inconclusive points are
    reported and the scan continues.
    """
    m_lo, m_hi = _validate_range(m_range, "m")
    n_lo, n_hi = _validate_range(n_range, "n")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    if strategy == "exact":
        if table is None:
            raise ValueError("exact strategy needs a Bernoulli table")
        if 2 * m_hi > table.max_index:
            raise CapacityError(
                f"scan up to m={m_hi} needs B_{2 * m_hi}, table stops at B_{table.max_index}"
            )

    # Largest m the exact path can serve; auto degrades past it instead of
    # failing, so the prefix product must stop there too.
    if table is None or strategy == "bound":
        exact_cap = 0
    elif strategy == "exact":
        exact_cap = table.max_index // 2
    else:
        exact_cap = min(max_exact_m, table.max_index // 2)

    zeta_reciprocal_product = Fraction(1)  # prod_{k<=m} 1/|zeta(1-2k)|
    for k in range(1, min(m_lo, exact_cap + 1)):
        zeta_reciprocal_product /= abs_zeta_one_minus_2k(k, table)

    for m in range(m_lo, m_hi + 1):
        exact_ok = m <= exact_cap
        if exact_ok:
            zeta_reciprocal_product /= abs_zeta_one_minus_2k(m, table)
            exact_value = zeta_reciprocal_product * rising_factorial_ratio(
                2 * m + n_lo - 1, 2 * m
            )
        bound_value: RationalInterval | None = None
        if strategy in ("bound", "auto"):
            bound_value = _term_product(m, precision).scale(
                rising_factorial_ratio(2 * m + n_lo - 1, 2 * m)
            )
        for n in range(n_lo, n_hi + 1):
            if strategy == "exact":
                cert: Certificate = certificate_from_exact(exact_value)
            elif bound_value is not None and bound_value.hi < 1:
                cert = MagnitudeWitness(
                    upper=bound_value.hi, statement=f"0 < e({m},{n}) < 1"
                )
            elif strategy == "auto" and exact_ok:
                cert = certificate_from_exact(exact_value)
            else:
                cert = Inconclusive(
                    f"upper bound for e({m},{n}) is not below 1 and exact "
                    "evaluation is unavailable"
                )
            yield ScanPoint(m=m, n=n, certificate=cert)
            # Advance the row: both running values gain the factor (2m+n).
            if exact_ok:
                exact_value *= 2 * m + n
            if bound_value is not None:
                bound_value = bound_value.scale(2 * m + n)


@dataclass(frozen=True)
class MonotoneReport:
    """Exact comparison of consecutive e(m,n) over a range of m."""

    n: int
    m_lo: int
    m_hi: int
    increasing_steps: tuple[int, ...]  # m where e(m+1,n) >= e(m,n)

    @property
    def strictly_decreasing(self) -> bool:
        return not self.increasing_steps


def monotone_decrease_check(
    n: int, m_range: tuple[int, int], table: BernoulliTable
) -> MonotoneReport:
    """Verify e(m+1,n) < e(m,n) exactly for each consecutive pair in range."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m_lo, m_hi = _validate_range(m_range, "m")
    if 2 * m_hi > table.max_index:
        raise CapacityError(
            f"monotonicity up to m={m_hi} needs B_{2 * m_hi}, "
            f"table stops at B_{table.max_index}"
        )
    current = e_mn(EmnQuery(m_lo, n), table)
    increasing: list[int] = []
    for m in range(m_lo, m_hi):
        step = Fraction((2 * m + n) * (2 * m + n + 1), (2 * m + 1) * (2 * m + 2))
        nxt = current * step / abs_zeta_one_minus_2k(m + 1, table)
        if nxt >= current:
            increasing.append(m)
        current = nxt
    return MonotoneReport(
        n=n, m_lo=m_lo, m_hi=m_hi, increasing_steps=tuple(increasing)
    )


# ---------------------------------------------------------------------------
# The closing bound over the full witnessed window n <= MAX_WITNESSED_N.
#
# Two readings of the same display exist: a per-index product of
# (2pi)^(2k)/(2(2k-1)!), consistent with the bound U(m,n) above, and a
# product whose factor (2pi)^(2m+2)/(2(2m+1)!) does not depend on the
# product index at all.  They differ astronomically; both are evaluated and
# reported, with no guess about which was intended.  The constant-factor
# reading first drops below 1 at m = 37.


@dataclass(frozen=True)
class WideRangeBoundForms:
    m: int
    per_index_product: RationalInterval
    constant_factor_product: RationalInterval


def wide_range_bound_forms(m: int, precision: int = 64) -> WideRangeBoundForms:
    """Both readings of the closing bound, sharing the (2m+677)!/(2m)! prefix."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    bits = max(precision, 16) + _GUARD_BITS
    prefix = rising_factorial_ratio(2 * m + MAX_WITNESSED_N, 2 * m)
    per_index = _term_product(m, precision).scale(prefix)
    constant = _pow_outward(single_term_interval(m + 1, precision), m, bits).scale(prefix)
    return WideRangeBoundForms(
        m=m, per_index_product=per_index, constant_factor_product=constant
    )


def wide_range_constant_form_threshold(m_cap: int = 60, precision: int = 64) -> int | None:
    """Smallest m <= m_cap with the constant-factor form certified below 1."""
    for m in range(1, m_cap + 1):
        if wide_range_bound_forms(m, precision).constant_factor_product.hi < 1:
            return m
    return None
