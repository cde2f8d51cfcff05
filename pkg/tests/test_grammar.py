from __future__ import annotations

from fractions import Fraction

import pytest

from eulersums.grammar import ParseError, SignatureError, parse_equation, parse_expr, parse_signature
from eulersums.sums import DivergentSum, SumSignature
from eulersums.symbolic import Expression, render


def test_quadratic_signature():
    sig = parse_signature("S(1,2;3)")
    assert sig.inner == ((1, False), (2, False))
    assert sig.outer_exponent == 3 and not sig.outer_alternating
    assert sig.weight == 6 and sig.depth == 2


def test_barred_signature():
    sig = parse_signature("S(b1,3;2)")
    assert sig.inner == ((1, True), (3, False))
    assert str(sig) == "S(b1,3;2)"


def test_inner_order_does_not_matter():
    assert parse_signature("S(3,2;4)") == parse_signature("S(2,3;4)")


def test_closed_form_text():
    e = parse_expr("-101/48*z6 + 5/2*z3^2")
    expected = Expression.zeta(6) * Fraction(-101, 48) + Expression.zeta(3) ** 2 * Fraction(5, 2)
    assert e == expected
    assert render(e) == "-101/48*z6 + 5/2*z3^2"


def test_whitespace_is_ignored():
    assert parse_expr(" S( b1 , 3 ; 2 )  -  2 * z3 ^ 2 ") == parse_expr("S(b1,3;2)-2*z3^2")


def test_divergent_signature_names_the_rule():
    with pytest.raises(SignatureError) as info:
        parse_expr("S(2;1)")
    assert "outer exponent" in str(info.value)


def test_divergent_signature_object():
    with pytest.raises(DivergentSum):
        SumSignature.of(2, 1)


@pytest.mark.parametrize(
    "text, pos",
    [("z3 +", 4), ("2*/z3", 2), ("S(1,2;", 0), ("z3 $ z5", 3), ("Li4(1/3)", 0)],
)
def test_syntax_errors_carry_a_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == pos
    assert "position" in str(info.value)


def test_empty_input():
    with pytest.raises(ParseError):
        parse_expr("   ")


def test_equation():
    lhs, rhs = parse_equation("S(1;2) == 2*z3")
    assert lhs == Expression.sum_of(SumSignature.of(1, 2))
    assert rhs == Expression.zeta(3) * 2
    with pytest.raises(ParseError):
        parse_equation("S(1;2)")


def test_atoms_of_every_kind():
    e = parse_expr("pi^2 + ln2 + zb3 + Li4(1/2) + S(;b1) + S(b2;b3)")
    # zb3 = 3/4 z3 and S(;b1) = ln2 after bar elimination
    from eulersums.symbolic import Atom, Monomial

    assert e.coefficient(Monomial.of(Atom.ln2())) == 2
    assert e.coefficient(Monomial.of(Atom.zeta(3))) == Fraction(3, 4)
    assert e.coefficient(Monomial(((Atom.pi(), 2),))) == 1
    assert len(e.terms) == 5
    assert parse_expr(render(e)) == e
