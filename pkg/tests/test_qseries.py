from fractions import Fraction

import pytest

from intsymp.poly import LaurentPoly as LP
from intsymp.qseries import (
    qtext,
    bracket_ratio,
    nonneg_coeffs,
    one_minus_q,
    one_plus_q,
    poly_at_q1,
    q_binom,
    q_int,
    q_power,
)


def test_q_int():
    assert q_int(0).is_zero()
    assert q_int(1).is_one()
    assert qtext(q_int(4)) == "q^3 + q^2 + q + 1"
    with pytest.raises(ValueError):
        q_int(Fraction(3, 2))
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_power_half():
    assert q_power(Fraction(1, 2)) == LP.monomial(1, (1,))
    assert q_power(-2) == LP.monomial(1, (-4,))
    with pytest.raises(ValueError):
        q_power(Fraction(1, 4))


def test_angle_bracket():
    assert qtext(one_plus_q(3)) == "q^3 + 1"
    assert qtext(one_minus_q(Fraction(1, 2))) == "-q^1/2 + 1"


def test_binom_pascal():
    # q-Pascal rule binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
    for n in range(1, 8):
        for k in range(n + 1):
            lhs = q_binom(n, k)
            rhs = q_binom(n - 1, k - 1) + q_power(k) * q_binom(n - 1, k)
            assert lhs == rhs


def test_binom_symmetry_positivity():
    for n in range(9):
        for k in range(n + 1):
            b = q_binom(n, k)
            assert b == q_binom(n, n - k)
            assert nonneg_coeffs(b)
            assert poly_at_q1(b) == _choose(n, k)
    assert q_binom(3, 5).is_zero()
    assert q_binom(3, -1).is_zero()


def _choose(n, k):
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


def test_bracket_ratio_half_integers():
    # [5/2]/[1/2] = (1 - q^(5/2)) / (1 - q^(1/2)) = 1 + q^(1/2) + ... + q^2
    r = bracket_ratio([Fraction(5, 2)], [Fraction(1, 2)])
    assert r == LP(1, {(i,): 1 for i in range(5)})
    # non-divisible ratios are rejected rather than approximated
    from intsymp.poly import ExactDivisionError

    with pytest.raises(ExactDivisionError):
        bracket_ratio([3], [2])
