from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulersums.exact import bernoulli, euler_at_zero, even_zeta_ratio, zeta_even_closed
from eulersums.symbolic import Atom, Expression

from oracles import bernoulli_at


@pytest.mark.parametrize(
    "n, expected",
    [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30)), (7, Fraction(0))],
)
def test_small_bernoulli_numbers(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_eight_matches_triangle_oracle():
    assert bernoulli(8) == bernoulli_at(8) == Fraction(-1, 30)


@pytest.mark.parametrize("n", range(0, 61))
def test_bernoulli_matches_akiyama_tanigawa(n):
    assert bernoulli(n) == bernoulli_at(n)


def test_odd_bernoulli_vanish():
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 30))


@pytest.mark.parametrize("n", range(1, 41))
def test_bernoulli_recurrence(n):
    assert sum(comb(n + 1, j) * bernoulli(j) for j in range(n + 1)) == 0


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_even_zeta_closed_forms():
    pi = Expression.atom(Atom.pi())
    assert zeta_even_closed(2) == pi**2 * Fraction(1, 6)
    assert zeta_even_closed(4) == pi**4 * Fraction(1, 90)
    assert even_zeta_ratio(6) == Fraction(1, 945)


@pytest.mark.parametrize("bad", [0, 3, -2, 7])
def test_even_zeta_closed_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        zeta_even_closed(bad)


def test_euler_polynomial_at_zero():
    # 2/(e^t+1) = 1 - t/2 + t^3/24 - t^5/240 + ...
    assert [euler_at_zero(k) for k in range(6)] == [1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2)]


fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**12)


@settings(max_examples=1000)
@given(fractions, fractions, fractions)
def test_rational_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    s = a + b
    assert s.denominator > 0
    from math import gcd

    assert gcd(abs(s.numerator), s.denominator) == 1
