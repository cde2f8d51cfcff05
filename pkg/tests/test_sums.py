from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from eulersums.grammar import parse_expr, parse_signature
from eulersums.identities import euler_linear_sum
from eulersums.numerics import DomainError, PrecisionContext, zeta_value
from eulersums.sums import (
    DivergentSum,
    SumSignature,
    euler_sum_value,
    generating_function_residual,
    kernel_integral_residual,
    log_moment_residual,
    partial_alt,
    partial_zeta,
)
from eulersums.symbolic import expr_eval

from oracles import euler_sum_oracle, partial_zeta_brute


def _close(res, truth, tol):
    with mp.workprec(max(res.prec, 200)):
        assert abs(res.value - truth) <= res.bound + tol, (res, truth)


@settings(max_examples=1000)
@given(st.integers(0, 60), st.integers(1, 6))
def test_partial_sums_exact(n, p):
    assert partial_zeta(n, p) == partial_zeta_brute(n, p)
    assert partial_alt(n, p) == sum((Fraction((-1) ** (k - 1), k**p) for k in range(1, n + 1)), Fraction(0))


def test_signature_rules():
    assert SumSignature.of(-1, 3, 2) == parse_signature("S(b1,3;2)")
    assert SumSignature.of(-1).weight == 1
    with pytest.raises(DivergentSum):
        SumSignature.of(1, 1)
    with pytest.raises(ValueError):
        SumSignature.of(1, 2, 3, 4)
    with pytest.raises(ValueError):
        SumSignature.of(0, 3)


def test_s_1_2_is_twice_zeta_3(ctx30):
    diff = euler_sum_value(SumSignature.of(1, 2), ctx30) - zeta_value(3, ctx30) * 2
    assert abs(diff.value) <= diff.bound <= ctx30.tolerance


def test_s_1_3_is_five_quarters_zeta_4(ctx30):
    # Euler's formula at k = 3: (5 z4 - z2^2)/2 = 5/4 z4
    diff = euler_sum_value(SumSignature.of(1, 3), ctx30) - zeta_value(4, ctx30) * Fraction(5, 4)
    assert abs(diff.value) <= diff.bound


@pytest.mark.parametrize("k", range(2, 10))
def test_linear_sums_against_euler_formula(k, ctx30):
    ident = euler_linear_sum(k)
    res = ident.residual(ctx30)
    assert abs(res.value) + res.bound <= ctx30.tolerance * 10


@pytest.mark.parametrize(
    "inner, q",
    [((2, 2), 3), ((1, 2), 3), ((1, 7), 2), ((1, 2), 7), ((1, 3), 4), ((3, 4), 2), ((1,), 5), ((2,), 4)],
)
def test_quadratic_sums_against_quadrature_oracle(inner, q, ctx30):
    truth = euler_sum_oracle(inner, q)
    _close(euler_sum_value(SumSignature.of(*inner, q), ctx30), truth, mpf(10) ** -15)


def test_s_1_2_3_value(ctx30):
    res = euler_sum_value(SumSignature.of(1, 2, 3), ctx30)
    assert mpmath.nstr(res.value, 12) == "1.47169263649"


def test_alternating_harmonic_square_at_high_precision():
    # regression: large expansion coefficients were once skipped, giving 1.0542 with a tiny bound.
    # sum (-1)^(n-1) L_n(1)/n = ((sum a_k)^2 + sum a_k^2)/2 with a_k = (-1)^(k-1)/k
    ctx = PrecisionContext(target_digits=90)
    res = euler_sum_value(parse_signature("S(b1;b1)"), ctx)
    with mp.workdps(120):
        truth = (mpmath.log(2) ** 2 + mpmath.zeta(2)) / 2
        assert abs(res.value - truth) <= res.bound <= mpf(10) ** -90


def _all_signatures(max_weight: int):
    out = []
    for depth in (0, 1, 2):
        for args in itertools.product(range(1, max_weight + 1), repeat=depth + 1):
            if sum(args) > max_weight:
                continue
            for bars in itertools.product((False, True), repeat=depth + 1):
                inner = tuple(sorted(zip(args[:-1], bars[:-1])))
                try:
                    sig = SumSignature(inner, args[-1], bars[-1])
                except DivergentSum:
                    continue
                if sig not in out:
                    out.append(sig)
    return out


@pytest.mark.parametrize("sig", _all_signatures(5), ids=str)
def test_bounds_hold_across_precisions(sig):
    lo = euler_sum_value(sig, PrecisionContext(target_digits=20))
    hi = euler_sum_value(sig, PrecisionContext(target_digits=45))
    with mp.workprec(hi.prec):
        assert abs(lo.value - hi.value) <= lo.bound + hi.bound
    assert lo.bound <= mpf(10) ** -20


@pytest.mark.parametrize("n, p, x", [(1, 2, "1/4"), (2, 3, "-1/2"), (5, 2, "1/2")])
def test_kernel_integral(n, p, x, ctx30):
    r = kernel_integral_residual(n, p, Fraction(x), ctx30)
    assert abs(r.value) + r.bound <= mpf(10) ** -15


def test_kernel_domain():
    with pytest.raises(DomainError):
        kernel_integral_residual(1, 2, Fraction(1), PrecisionContext())
    with pytest.raises(DomainError):
        log_moment_residual(0, 1, PrecisionContext())


def test_generating_function(ctx30):
    res, tail = generating_function_residual(2, Fraction(1, 3), 80, ctx30)
    assert abs(res.value) <= res.bound + tail


def test_alternating_closed_forms(ctx30):
    # sum (-1)^(n-1) H_n / n^2 = 5/8 z3  (reflection of two alternating series)
    res = euler_sum_value(parse_signature("S(1;b2)"), ctx30)
    truth = expr_eval(parse_expr("5/8*z3"), ctx30)
    diff = res - truth
    assert abs(diff.value) <= diff.bound
