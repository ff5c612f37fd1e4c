from fractions import Fraction

import pytest

from torelli_euler.bernoulli import CapacityError
from torelli_euler.zeta_special import (
    abs_zeta_one_minus_2k,
    zeta_abs_lower_bound,
    zeta_one_minus_2k,
)


@pytest.mark.parametrize(
    "k,expected",
    [
        (1, Fraction(-1, 12)),
        (2, Fraction(1, 120)),
        (3, Fraction(-1, 252)),
        (6, Fraction(691, 32760)),
        (8, Fraction(3617, 8160)),
    ],
)
def test_exact_values(k, expected, table60):
    assert zeta_one_minus_2k(k, table60).value == expected


def test_sign_and_bernoulli_identity(table60):
    for k in range(1, 31):
        zeta = zeta_one_minus_2k(k, table60)
        assert (zeta.value > 0) == (k % 2 == 0)
        assert zeta.value * (2 * k) / table60.even(k) == -1


def test_capacity_and_domain_errors(table60):
    with pytest.raises(CapacityError):
        zeta_one_minus_2k(31, table60)
    with pytest.raises(ValueError):
        zeta_one_minus_2k(0, table60)


def test_lower_bound_small_cases(table60):
    import math

    # k = 1: encloses 2/(2pi)^2 ~ 0.0507, beaten by |zeta(-1)| = 1/12
    bound1 = zeta_abs_lower_bound(1)
    assert abs(float(bound1.lo) - 2 / (2 * math.pi) ** 2) < 1e-12
    assert Fraction(1, 12) > bound1.hi
    # k = 2: encloses 12/(2pi)^4 ~ 0.00770, beaten by 1/120
    bound2 = zeta_abs_lower_bound(2)
    assert abs(float(bound2.lo) - 12 / (2 * math.pi) ** 4) < 1e-12
    assert Fraction(1, 120) > bound2.hi


def test_lower_bound_certified_for_first_hundred(table600):
    for k in range(1, 101):
        assert abs_zeta_one_minus_2k(k, table600) > zeta_abs_lower_bound(k, 64).hi


def test_lower_bound_positive_even_at_low_precision():
    assert zeta_abs_lower_bound(3, 8).lo > 0
