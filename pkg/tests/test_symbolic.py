from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from mpmath import mp

from eulersums.grammar import parse_expr
from eulersums.numerics import PrecisionContext
from eulersums.symbolic import (
    Atom,
    Expression,
    Monomial,
    canonical,
    expr_eval,
    merge_even_zetas,
    normalize,
    render,
)

from strategies import expressions, simple_atoms


@settings(max_examples=1000)
@given(expressions())
def test_normalize_is_idempotent(e):
    once = normalize(e)
    assert normalize(once) == once
    assert canonical(canonical(e)) == canonical(e)


@settings(max_examples=1000)
@given(expressions())
def test_parse_render_round_trip(e):
    assert parse_expr(render(e)) == e


@settings(max_examples=1000)
@given(expressions(max_terms=3), expressions(max_terms=3), expressions(max_terms=3))
def test_ring_laws(a, b, c):
    assert (a + b) - b == a
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=1000)
@given(expressions(), expressions())
def test_weights_add_under_products(a, b):
    prod = a * b
    assert prod.weights() <= {x + y for x in a.weights() for y in b.weights()}


@settings(max_examples=300)
@given(expressions(simple_atoms, max_terms=3), expressions(simple_atoms, max_terms=3))
def test_evaluation_is_a_ring_homomorphism(a, b):
    ctx = PrecisionContext(target_digits=20)
    lhs = expr_eval(a * b + a, ctx)
    rhs = expr_eval(a, ctx) * expr_eval(b, ctx) + expr_eval(a, ctx)
    with mp.workprec(lhs.prec):
        assert abs(lhs.value - rhs.value) <= lhs.bound + rhs.bound


@settings(max_examples=300)
@given(expressions(simple_atoms, max_terms=4))
def test_canonical_preserves_value(e):
    ctx = PrecisionContext(target_digits=20)
    diff = expr_eval(e - canonical(e), ctx)
    assert abs(diff.value) <= diff.bound


def test_bar_elimination():
    assert Expression.zetabar(3) == Expression.zeta(3) * Fraction(3, 4)
    assert Expression.zetabar(1) == Expression.ln2()
    assert parse_expr("S(;b4)") == Expression.zeta(4) * Fraction(7, 8)


def test_even_zeta_products_merge():
    e = merge_even_zetas(Expression.zeta(2) * Expression.zeta(4))
    assert e == Expression.zeta(6) * Fraction(7, 4)
    assert merge_even_zetas(Expression.zeta(3) * Expression.zeta(4)) == Expression.zeta(3) * Expression.zeta(4)


def test_zero_and_constants():
    assert render(Expression.zero()) == "0"
    assert Expression.constant(Fraction(3, 2)).constant_value() == Fraction(3, 2)
    with pytest.raises(ValueError):
        Expression.zeta(3).constant_value()
    with pytest.raises(ZeroDivisionError):
        Expression.zeta(3) / 0


def test_atom_validation():
    with pytest.raises(ValueError):
        Atom.zeta(1)
    with pytest.raises(ValueError):
        Atom.li_half(1)
    with pytest.raises(ValueError):
        Monomial(((Atom.ln2(), -1),))


def test_substitute():
    e = parse_expr("2*S(1;2) + z2*S(1;2)^2")
    out = e.substitute({Atom.euler_sum(parse_expr("S(1;2)").atoms().pop().sig): Expression.zeta(3) * 2})
    assert out == parse_expr("4*z3 + 4*z2*z3^2")
