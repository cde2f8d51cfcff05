"""Parametrized identity families between Euler sums.

Each generator returns an :class:`Identity` whose two sides are symbolic
expressions in zeta values, ln 2, Li_k(1/2) and Euler-sum atoms.  A few
families have a side that is not a finite combination of atoms (a series over
tails of zeta values); those carry a numerical callable for that side instead.

Signs and ranges are transcribed as published except where a comment says
otherwise.  Barred arguments are written as negative integers in the helpers.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .grammar import parse_expr
from .numerics import DomainError, NumericalResult, PrecisionContext
from .reference import ALTERNATING_WEIGHT_SIX, COMBINATIONS, QUADRATIC_CLOSED_FORMS
from .sums import SumSignature, hurwitz_weighted_lhs, hurwitz_weighted_rhs
from .symbolic import Expression, expr_eval

__all__ = [
    "Identity",
    "GENERATORS",
    "euler_linear_sum",
    "reflection",
    "zeta_weighted_harmonic",
    "hurwitz_zeta_weighted_harmonic",
    "odd_gap_harmonic_sum",
    "odd_gap_alternating_harmonic_sum",
    "even_gap_harmonic_difference",
    "even_gap_alternating_harmonic_difference",
    "mixed_sign_triple",
    "all_alternating_triple",
    "cyclic_triple",
    "odd_gap_square_sum",
    "even_gap_square_difference",
    "square_cyclic_triple",
    "alternating_outer_quadratic",
    "cube_odd_gap",
    "cube_even_gap",
    "weight_six_alternating",
    "printed_closed_forms",
    "printed_combinations",
    "generator_cells",
    "grid_identities",
    "PM_FAMILIES",
    "HURWITZ_SHIFTS",
]

NumericSide = Callable[[PrecisionContext], NumericalResult]


@dataclass(frozen=True)
class Identity:
    """``lhs == rhs``; a side given as a callable replaces the expression on that side."""

    id: str
    lhs: Expression
    rhs: Expression
    params: tuple[tuple[str, object], ...] = ()
    anchor: str = ""
    numeric_lhs: NumericSide | None = field(default=None, compare=False)
    numeric_rhs: NumericSide | None = field(default=None, compare=False)

    @property
    def is_symbolic(self) -> bool:
        return self.numeric_lhs is None and self.numeric_rhs is None

    def difference(self) -> Expression:
        """lhs - rhs as one expression; only meaningful for symbolic identities."""
        if not self.is_symbolic:
            raise DomainError(f"{self.id} has a side without a symbolic form")
        return self.lhs - self.rhs

    def residual(self, ctx: PrecisionContext) -> NumericalResult:
        if self.is_symbolic:
            return expr_eval(self.difference(), ctx)
        left = self.numeric_lhs(ctx) if self.numeric_lhs else expr_eval(self.lhs, ctx)
        right = self.numeric_rhs(ctx) if self.numeric_rhs else expr_eval(self.rhs, ctx)
        return left - right

    def weights(self) -> set[int]:
        out: set[int] = set()
        if self.numeric_lhs is None:
            out |= self.lhs.weights()
        if self.numeric_rhs is None:
            out |= self.rhs.weights()
        return out

    def __str__(self) -> str:
        left = "<series>" if self.numeric_lhs else str(self.lhs)
        right = "<series>" if self.numeric_rhs else str(self.rhs)
        return f"{self.id}: {left} == {right}"


# shorthand used by the transcriptions below


def S(*args: int) -> Expression:
    return Expression.sum_of(SumSignature.of(*args))


def z(k: int) -> Expression:
    return Expression.zeta(k)


def zb(k: int) -> Expression:
    return Expression.zetabar(k)


LN2 = Expression.ln2()


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def _label(name: str, **params) -> str:
    inner = ",".join(f"{k}={v}" for k, v in params.items())
    return f"{name}({inner})"


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


# --- linear sums -----------------------------------------------------------


def euler_linear_sum(k: int) -> Identity:
    """S(1;k) = ((k+2) z(k+1) - sum_{i=1}^{k-2} z(k-i) z(i+1)) / 2."""
    _need(k >= 2, "need k >= 2")
    rhs = z(k + 1) * (k + 2)
    for i in range(1, k - 1):
        rhs = rhs - z(k - i) * z(i + 1)
    return Identity(
        _label("euler_linear_sum", k=k), S(1, k), rhs / 2, (("k", k),),
        "S(1;k) = ((k+2)z(k+1) - sum z(k-i)z(i+1))/2",
    )


def reflection(p: int, q: int) -> Identity:
    """S(p;q) + S(q;p) = z(p) z(q) + z(p+q)."""
    _need(p >= 2 and q >= 2, "need p, q >= 2")
    return Identity(
        _label("reflection", p=p, q=q), S(p, q) + S(q, p), z(p) * z(q) + z(p + q),
        (("p", p), ("q", q)), "S(p;q)+S(q;p) = z(p)z(q)+z(p+q)",
    )


# --- tails of zeta values weighted by 1/n ----------------------------------


def zeta_weighted_harmonic(m: int, p: int) -> Identity:
    """sum_n (z(m) zeta_n(p) - z(p) zeta_n(m))/n in terms of S(1;m), S(1;p).

    The left side goes through the same shifted-series routine as the Hurwitz
    family at shift 0.
    """
    _need(m >= 2 and p >= 2, "need m, p >= 2")
    rhs = z(p) * S(1, m) - z(m) * S(1, p) + z(m) * z(p + 1) - z(p) * z(m + 1)
    return Identity(
        _label("zeta_weighted_harmonic", m=m, p=p), Expression.zero(), rhs,
        (("m", m), ("p", p)), "sum (z(m)zeta_n(p)-z(p)zeta_n(m))/n",
        numeric_lhs=functools.partial(hurwitz_weighted_lhs, m, p, 0),
    )


def hurwitz_zeta_weighted_harmonic(m: int, p: int, a) -> Identity:
    """The same relation with every partial sum shifted by ``a`` (a > -1); both sides numeric."""
    a = Fraction(a)
    _need(m >= 2 and p >= 2 and a > -1, "need m, p >= 2 and a > -1")
    return Identity(
        _label("hurwitz_zeta_weighted_harmonic", m=m, p=p, a=a), Expression.zero(), Expression.zero(),
        (("m", m), ("p", p), ("a", a)), "shifted sum (z(m,a+1)zeta_n(p,a+1)-...)/(n+a)",
        numeric_lhs=functools.partial(hurwitz_weighted_lhs, m, p, a),
        numeric_rhs=functools.partial(hurwitz_weighted_rhs, m, p, a),
    )


# --- quadratic sums with a harmonic factor ---------------------------------


def _harmonic_core(p: int, r: int) -> Expression:
    """z(p)S(1;r) - z(r)S(1;p) + z(p+1)z(r) - z(p)z(r+1) + the two single-sum corrections."""
    out = z(p) * S(1, r) - z(r) * S(1, p) + z(p + 1) * z(r) - z(p) * z(r + 1)
    for i in range(2, r):
        out = out + z(r + 1 - i) * S(p, i) * _sgn(i - 1)
    for i in range(2, p):
        out = out - z(p + 1 - i) * S(r, i) * _sgn(i - 1)
    return out


def odd_gap_harmonic_sum(p: int, m: int) -> Identity:
    """(-1)^(p-1) [S(1,q;p) + S(1,p;q)] with q = p+2m+1."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    lhs = (S(1, q, p) + S(1, p, q)) * _sgn(p - 1)
    return Identity(
        _label("odd_gap_harmonic_sum", p=p, m=m), lhs, _harmonic_core(p, q),
        (("p", p), ("m", m)), "(-1)^(p-1){S(1,q;p)+S(1,p;q)}, q=p+2m+1",
    )


def even_gap_harmonic_difference(p: int, m: int) -> Identity:
    """(-1)^(p-1) [S(1,r;p) - S(1,p;r)] with r = p+2m."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    r = p + 2 * m
    lhs = (S(1, r, p) - S(1, p, r)) * _sgn(p - 1)
    return Identity(
        _label("even_gap_harmonic_difference", p=p, m=m), lhs, _harmonic_core(p, r),
        (("p", p), ("m", m)), "(-1)^(p-1){S(1,r;p)-S(1,p;r)}, r=p+2m",
    )


def _alternating_core(p: int, r: int, sign: int) -> Expression:
    """Right side shared by the alternating harmonic families; ``sign`` is +1 for sums, -1 for differences."""
    out = Expression.zero()
    for i in range(1, r):
        out = out + zb(r + 1 - i) * S(p, -i) * _sgn(i - 1)
    for i in range(1, p):
        out = out - zb(p + 1 - i) * S(r, -i) * _sgn(i - 1)
    out = out + LN2 * (S(r, p) + S(p, r) * sign) * _sgn(p)
    out = out + LN2 * (S(r, -p) + S(p, -r) * sign) * _sgn(p)
    return out


def odd_gap_alternating_harmonic_sum(p: int, m: int) -> Identity:
    """(-1)^p [S(b1,q;p) + S(b1,p;q)] with q = p+2m+1."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    lhs = (S(-1, q, p) + S(-1, p, q)) * _sgn(p)
    return Identity(
        _label("odd_gap_alternating_harmonic_sum", p=p, m=m), lhs, _alternating_core(p, q, 1),
        (("p", p), ("m", m)), "(-1)^p{S(b1,q;p)+S(b1,p;q)}, q=p+2m+1",
    )


def even_gap_alternating_harmonic_difference(p: int, m: int) -> Identity:
    """(-1)^p [S(b1,r;p) - S(b1,p;r)] with r = p+2m."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    r = p + 2 * m
    lhs = (S(-1, r, p) - S(-1, p, r)) * _sgn(p)
    return Identity(
        _label("even_gap_alternating_harmonic_difference", p=p, m=m), lhs, _alternating_core(p, r, -1),
        (("p", p), ("m", m)), "(-1)^p{S(b1,r;p)-S(b1,p;r)}, r=p+2m",
    )


# --- three-term cyclic relations -------------------------------------------


def _signed_sum(inner: tuple[tuple[int, int], ...], m: int, w: int) -> Expression:
    """sum_n prod zeta_n(l; x) w^n / n^m with x, w in {1, -1}, as a signed S atom.

    zeta_n(l; -1) = -L_n(l) and (-1)^n = -(-1)^(n-1).
    """
    sign = 1
    args = []
    for l, x in inner:
        if x == -1:
            sign = -sign
            args.append(-l)
        else:
            args.append(l)
    if w == -1:
        sign = -sign
        m = -m
    return S(*args, m) * sign


def _li_at_unit(k: int, x: int) -> Expression:
    if x == 1:
        if k < 2:
            raise DomainError("Li_1(1) diverges")
        return z(k)
    return -zb(k)


def cyclic_triple(l1: int, l2: int, m: int, x: int, y: int, w: int) -> Identity:
    """Three cyclic quadratic sums with unimodular arguments x, y, w in {1, -1}.

    sum zeta_n(l1;x)zeta_n(l2;y)w^n/n^m + sum zeta_n(l1;x)zeta_n(m;w)y^n/n^l2
      + sum zeta_n(l2;y)zeta_n(m;w)x^n/n^l1
      = sum zeta_n(l1;x)(yw)^n/n^(l2+m) + sum zeta_n(l2;y)(xw)^n/n^(l1+m)
        + sum zeta_n(m;w)(xy)^n/n^(l1+l2) + Li_l1(x)Li_l2(y)Li_m(w) - Li_(l1+l2+m)(xyw)
    """
    for v in (x, y, w):
        _need(v in (1, -1), "arguments must be 1 or -1")
    _need(min(l1, l2, m) >= 1, "exponents must be positive")
    lhs = (
        _signed_sum(((l1, x), (l2, y)), m, w)
        + _signed_sum(((l1, x), (m, w)), l2, y)
        + _signed_sum(((l2, y), (m, w)), l1, x)
    )
    rhs = (
        _signed_sum(((l1, x),), l2 + m, y * w)
        + _signed_sum(((l2, y),), l1 + m, x * w)
        + _signed_sum(((m, w),), l1 + l2, x * y)
        + _li_at_unit(l1, x) * _li_at_unit(l2, y) * _li_at_unit(m, w)
        - _li_at_unit(l1 + l2 + m, x * y * w)
    )
    return Identity(
        _label("cyclic_triple", l1=l1, l2=l2, m=m, x=x, y=y, w=w), lhs, rhs,
        (("l1", l1), ("l2", l2), ("m", m), ("x", x), ("y", y), ("w", w)),
        "cyclic sum of quadratic sums at unimodular arguments",
    )


def mixed_sign_triple(p: int, m: int) -> Identity:
    """S(b1,q;p) + S(b1,p;q) + S(p,q;b1), q = p+2m+1, p >= 2."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    lhs = S(-1, q, p) + S(-1, p, q) + S(p, q, -1)
    rhs = S(p, -(q + 1)) + S(-1, p + q) + S(q, -(p + 1)) + LN2 * z(q) * z(p) - zb(p + q + 1)
    return Identity(
        _label("mixed_sign_triple", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "S(b1,q;p)+S(b1,p;q)+S(p,q;b1), q=p+2m+1",
    )


def all_alternating_triple(p: int, m: int) -> Identity:
    """S(b1,bq;bp) + S(b1,bp;bq) + S(bp,bq;b1), q = p+2m+1, p >= 1."""
    _need(p >= 1 and m >= 0, "need p >= 1, m >= 0")
    q = p + 2 * m + 1
    lhs = S(-1, -q, -p) + S(-1, -p, -q) + S(-p, -q, -1)
    rhs = S(-p, q + 1) + S(-1, p + q) + S(-q, p + 1) + LN2 * zb(q) * zb(p) - zb(p + q + 1)
    return Identity(
        _label("all_alternating_triple", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "S(b1,bq;bp)+S(b1,bp;bq)+S(bp,bq;b1), q=p+2m+1",
    )


def square_cyclic_triple(p: int, m: int) -> Identity:
    """S(2,q;p) + S(2,p;q) + S(p,q;2), q = p+2m+1."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    lhs = S(2, q, p) + S(2, p, q) + S(p, q, 2)
    rhs = S(2, p + q) + S(p, q + 2) + S(q, p + 2) + z(2) * z(p) * z(q) - z(p + q + 2)
    return Identity(
        _label("square_cyclic_triple", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "S(2,q;p)+S(2,p;q)+S(p,q;2), q=p+2m+1",
    )


def alternating_outer_quadratic(p: int, m: int) -> Identity:
    """S(p,q;b1) alone, q = p+2m+1, from the mixed-sign triple minus the odd-gap alternating family."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    rhs = S(p, -(q + 1)) + S(-1, p + q) + S(q, -(p + 1)) + LN2 * z(q) * z(p) - zb(p + q + 1)
    for i in range(1, q):
        rhs = rhs + zb(q + 1 - i) * S(p, -i) * (_sgn(p - 1) * _sgn(i - 1))
    for i in range(1, p):
        rhs = rhs - zb(p + 1 - i) * S(q, -i) * (_sgn(p - 1) * _sgn(i - 1))
    rhs = rhs - LN2 * (S(q, p) + S(p, q)) - LN2 * (S(q, -p) + S(p, -q))
    return Identity(
        _label("alternating_outer_quadratic", p=p, m=m), S(p, q, -1), rhs, (("p", p), ("m", m)),
        "S(p,q;b1), q=p+2m+1",
    )


# --- quadratic sums with a zeta_n(2) or zeta_n(3) factor -------------------


def _double_core(p: int, r: int) -> Expression:
    """sum_{i=1}^{r-1} sum_{j=1}^{r-i} (-1)^(i+j) z(r+2-i-j) S(p;i+j)."""
    out = Expression.zero()
    for i in range(1, r):
        for j in range(1, r - i + 1):
            out = out + z(r + 2 - i - j) * S(p, i + j) * _sgn(i + j)
    return out


def odd_gap_square_sum(p: int, m: int) -> Identity:
    """(-1)^(p-1) [S(2,q;p) + S(2,p;q)] with q = p+2m+1."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    lhs = (S(2, q, p) + S(2, p, q)) * _sgn(p - 1)
    rhs = _double_core(p, q) - _double_core(q, p)
    rhs = rhs - z(2) * (z(p) * z(q) + z(p + q)) * _sgn(p)
    rhs = rhs + S(1, p, q + 1) * (q * _sgn(p)) + S(1, q, p + 1) * (p * _sgn(p))
    return Identity(
        _label("odd_gap_square_sum", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "(-1)^(p-1){S(2,q;p)+S(2,p;q)}, q=p+2m+1",
    )


def even_gap_square_difference(p: int, m: int) -> Identity:
    """(-1)^(p-1) [S(2,r;p) - S(2,p;r)] with r = p+2m."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    r = p + 2 * m
    s = _sgn(p - 1)
    lhs = (S(2, r, p) - S(2, p, r)) * s
    rhs = _double_core(p, r) - _double_core(r, p)
    rhs = rhs - z(2) * (S(p, r) - S(r, p)) * s
    rhs = rhs + S(1, p, r + 1) * (r * s) - S(1, r, p + 1) * (p * s)
    return Identity(
        _label("even_gap_square_difference", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "(-1)^(p-1){S(2,r;p)-S(2,p;r)}, r=p+2m",
    )


def _triple_core(p: int, r: int) -> Expression:
    """sum_{l=1}^{r-1} sum_{i=1}^{r-l} sum_{j=1}^{r+1-i-l} (-1)^(i+j+l) z(r+3-i-j-l) S(p;i+j+l)."""
    out = Expression.zero()
    for l in range(1, r):
        for i in range(1, r - l + 1):
            for j in range(1, r + 2 - i - l):
                k = i + j + l
                out = out + z(r + 3 - k) * S(p, k) * _sgn(k)
    return out


def cube_odd_gap(p: int, m: int) -> Identity:
    """(-1)^p [S(3,q;p) + S(3,p;q)] with q = p+2m+1."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    q = p + 2 * m + 1
    s = _sgn(p)
    lhs = (S(3, q, p) + S(3, p, q)) * s
    rhs = z(3) * (S(q, p) + S(p, q)) * s
    rhs = rhs - S(1, q, p + 2) * (Fraction(p * (p + 1), 2) * s)
    # q(q+1)/2 as in the even-gap family; q(q-1)/2 leaves a residual of q S(1,p;q+2)
    rhs = rhs - S(1, p, q + 2) * (Fraction(q * (q + 1), 2) * s)
    rhs = rhs - (S(2, q, p + 1) - z(2) * S(q, p + 1)) * (p * s)
    rhs = rhs - (S(2, p, q + 1) - z(2) * S(p, q + 1)) * (q * s)
    rhs = rhs - _triple_core(q, p) + _triple_core(p, q)
    return Identity(
        _label("cube_odd_gap", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "(-1)^p[S(3,q;p)+S(3,p;q)], q=p+2m+1",
    )


def cube_even_gap(p: int, m: int) -> Identity:
    """(-1)^p [S(3,r;p) - S(3,p;r)] with r = p+2m."""
    _need(p >= 2 and m >= 0, "need p >= 2, m >= 0")
    r = p + 2 * m
    s = _sgn(p)
    lhs = (S(3, r, p) - S(3, p, r)) * s
    rhs = z(3) * (S(r, p) - S(p, r)) * s
    rhs = rhs - S(1, r, p + 2) * (Fraction(p * (p + 1), 2) * s)
    rhs = rhs + S(1, p, r + 2) * (Fraction(r * (r + 1), 2) * s)
    rhs = rhs - (S(2, r, p + 1) - z(2) * S(r, p + 1)) * (p * s)
    rhs = rhs + (S(2, p, r + 1) - z(2) * S(p, r + 1)) * (r * s)
    rhs = rhs - _triple_core(r, p) + _triple_core(p, r)
    return Identity(
        _label("cube_even_gap", p=p, m=m), lhs, rhs, (("p", p), ("m", m)),
        "(-1)^p[S(3,r;p)-S(3,p;r)], r=p+2m",
    )


# --- fixed published relations ---------------------------------------------


def weight_six_alternating() -> list[Identity]:
    """Closed forms for the weight-six alternating quadratic sums, including Li_4(1/2)."""
    return [
        Identity(name, parse_expr(lhs), parse_expr(rhs), (), lhs)
        for name, lhs, rhs in ALTERNATING_WEIGHT_SIX
    ]


def printed_closed_forms() -> list[Identity]:
    """One identity per quadratic sum with a published closed form."""
    out = []
    for sig, rhs in QUADRATIC_CLOSED_FORMS.items():
        out.append(Identity(f"closed_form{sig}", parse_expr(sig), parse_expr(rhs), (), sig))
    return out


def printed_combinations() -> list[Identity]:
    return [Identity(name, parse_expr(lhs), parse_expr(rhs), (), lhs) for name, lhs, rhs in COMBINATIONS]


# --- registry ---------------------------------------------------------------

# name -> (generator, smallest admissible p); all take (p, m)
PM_FAMILIES: dict[str, tuple[Callable[[int, int], Identity], int]] = {
    "odd_gap_harmonic_sum": (odd_gap_harmonic_sum, 2),
    "odd_gap_alternating_harmonic_sum": (odd_gap_alternating_harmonic_sum, 2),
    "even_gap_harmonic_difference": (even_gap_harmonic_difference, 2),
    "even_gap_alternating_harmonic_difference": (even_gap_alternating_harmonic_difference, 2),
    "mixed_sign_triple": (mixed_sign_triple, 2),
    "all_alternating_triple": (all_alternating_triple, 1),
    "odd_gap_square_sum": (odd_gap_square_sum, 2),
    "even_gap_square_difference": (even_gap_square_difference, 2),
    "square_cyclic_triple": (square_cyclic_triple, 2),
    "alternating_outer_quadratic": (alternating_outer_quadratic, 2),
    "cube_odd_gap": (cube_odd_gap, 2),
    "cube_even_gap": (cube_even_gap, 2),
}

GENERATORS: dict[str, str] = {
    "euler_linear_sum": "S(1;k) for k >= 2",
    "reflection": "S(p;q) + S(q;p) for p, q >= 2",
    "zeta_weighted_harmonic": "series over zeta tails weighted by 1/n, m, p >= 2",
    "hurwitz_zeta_weighted_harmonic": "the same with partial sums shifted by a > -1",
    "cyclic_triple": "three cyclic quadratic sums at arguments in {1, -1}",
    **{name: f"{fn.__doc__.splitlines()[0]} (p >= {pmin}, m >= 0)" for name, (fn, pmin) in PM_FAMILIES.items()},
    "weight_six_alternating": "four fixed weight-six alternating relations",
    "printed_closed_forms": "published closed forms of quadratic sums",
    "printed_combinations": "published closed forms of combinations of quadratic sums",
}

HURWITZ_SHIFTS = (Fraction(0), Fraction(1, 2), Fraction(1))


_UNIT_SIGNS = tuple((x, y, w) for x in (1, -1) for y in (1, -1) for w in (1, -1))


def generator_cells(name: str, p_range=range(2, 6), m_range=range(0, 3)) -> Iterator[Identity]:
    """Instances of one generator over the (p, m) grid; fixed relations ignore the grid.

    Parameter points outside a family's domain are left out silently.
    """
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}")
    if name in PM_FAMILIES:
        fn, pmin = PM_FAMILIES[name]
        for p in p_range:
            for m in m_range:
                if p >= pmin and m >= 0:
                    yield fn(p, m)
    elif name == "euler_linear_sum":
        for p in p_range:
            if p >= 2:
                yield euler_linear_sum(p)
    elif name == "reflection":
        for p in p_range:
            for m in m_range:
                if p >= 2 and m >= 0:
                    yield reflection(p, p + m)
    elif name == "zeta_weighted_harmonic":
        for p in p_range:
            for m in m_range:
                if p >= 2 and m >= 0:
                    yield zeta_weighted_harmonic(m + 2, p)
    elif name == "hurwitz_zeta_weighted_harmonic":
        for a in HURWITZ_SHIFTS:
            for p in p_range:
                for m in m_range:
                    if p >= 2 and m >= 0:
                        yield hurwitz_zeta_weighted_harmonic(m + 2, p, a)
    elif name == "cyclic_triple":
        for p in p_range:
            for m in m_range:
                for x, y, w in _UNIT_SIGNS:
                    try:
                        yield cyclic_triple(1, p, m + 1, x, y, w)
                    except DomainError:
                        pass
    elif name == "weight_six_alternating":
        yield from weight_six_alternating()
    elif name == "printed_closed_forms":
        yield from printed_closed_forms()
    elif name == "printed_combinations":
        yield from printed_combinations()


def grid_identities(p_range=range(2, 6), m_range=range(0, 3), generators=None) -> Iterator[Identity]:
    """Every requested generator (all by default) over the grid, in registry order."""
    for name in generators if generators is not None else GENERATORS:
        yield from generator_cells(name, p_range, m_range)
