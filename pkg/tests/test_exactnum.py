"""Test exact integer and rational helpers."""
from fractions import Fraction

import pytest

from quartic.arithmetic.exactnum import (
    decimal_digits,
    gcd_all,
    isqrt_exact,
    lambda_reduce,
    lcm_all,
    rational_sqrt,
    squarefree_part,
    squarefree_split,
    to_rational,
    trial_factor,
)


def test_to_rational_parses_fractions():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -7 ") == Fraction(-7)
    assert to_rational(5) == Fraction(5)


@pytest.mark.parametrize("text", ["1e3", "0.5", "2E-1"])
def test_to_rational_rejects_float_forms(text):
    with pytest.raises(ValueError):
        to_rational(text)


def test_to_rational_rejects_bool():
    with pytest.raises(TypeError):
        to_rational(True)


def test_gcd_and_lcm():
    assert gcd_all([0, -6]) == 6
    assert gcd_all([12, 18, -30]) == 6
    assert lcm_all([4, 6]) == 12
    assert lcm_all([]) == 1
    with pytest.raises(ValueError):
        gcd_all([])
    with pytest.raises(ValueError):
        lcm_all([3, 0])


def test_isqrt_exact():
    assert isqrt_exact(144) == 12
    assert isqrt_exact(145) is None
    assert isqrt_exact(0) == 0
    with pytest.raises(ValueError):
        isqrt_exact(-4)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(3263037129, 28561)) == Fraction(57123, 169)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None


def test_trial_factor():
    assert trial_factor(360) == ({2: 3, 3: 2, 5: 1}, 1)
    # primes up to 10 leave the product of two larger primes as cofactor
    assert trial_factor(1009 * 1013, limit=10) == ({}, 1009 * 1013)


def test_squarefree_split_and_part():
    assert squarefree_split(72) == (2, 6)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_part(Fraction(8)) == (2, Fraction(2))
    assert squarefree_part(Fraction(1, 8)) == (2, Fraction(1, 4))
    with pytest.raises(ValueError):
        squarefree_split(0)
    with pytest.raises(ValueError):
        squarefree_part(Fraction(-2))


def test_lambda_reduce():
    assert lambda_reduce(16, 64) == 2
    assert lambda_reduce(0, 64) == 2
    assert lambda_reduce(-2209, 0) == 1
    # canonical coefficients of the k=8 (k+5) model
    assert lambda_reduce(92416, 56188928) == 4
    with pytest.raises(ValueError):
        lambda_reduce(0, 0)


def test_decimal_digits():
    assert decimal_digits(0) == 1
    assert decimal_digits(999) == 3
    assert decimal_digits(1000) == 4
    assert decimal_digits(-10 ** 50) == 51
    assert decimal_digits(633380905148771673201251847502446439) == 36


@pytest.mark.parametrize(
    "values, expected",
    [
        ([64, 60, 880, 704, 352, 176, 964], 4),
        ([0, 7], 7),
        ([26979, 24378, 221996, 198628, 128524, 11684, 255463], 1),
    ],
)
def test_gcd_all_examples(values, expected):
    assert gcd_all(values) == expected


def test_isqrt_exact_curve_values():
    assert isqrt_exact(228484) == 478
    assert isqrt_exact(3263037129) == 57123
    assert isqrt_exact(2) is None


def test_squarefree_split_multiplier_sums():
    # 11^4 + 7^4 + 5^4 + 5 and 5^4 + 3^4 + 2^4 + 7
    assert squarefree_split(17672) == (2, 94)
    assert squarefree_split(729) == (1, 27)


@pytest.mark.parametrize("n", [2, 12, 50, 360, 17672, 92416, 3263037129, 2 * 3 * 5 * 7 * 11 ** 3, 10 ** 12 + 39])
def test_squarefree_split_property(n):
    c, m = squarefree_split(n)
    assert c * m * m == n
    assert m > 0
    factors, cofactor = trial_factor(c)
    assert all(e == 1 for e in factors.values())
    assert isqrt_exact(cofactor) in (None, 1)


def test_lambda_reduce_examples():
    assert lambda_reduce(40000, 16000000) == 10
    assert lambda_reduce(4, 16) == 1


@pytest.mark.parametrize(
    "a, b",
    [(40000, 16000000), (92416, 56188928), (228484 * 2 ** 4, 218430704 * 2 ** 6), (0, 3 ** 13), (-2209 * 5 ** 8, 0)],
)
def test_lambda_reduce_is_maximal(a, b):
    lam = lambda_reduce(a, b)
    assert a % lam ** 4 == 0 and b % lam ** 6 == 0
    assert lambda_reduce(a // lam ** 4, b // lam ** 6) == 1
