"""Partial sums and high-precision values of linear and quadratic Euler sums.

``S(p1,p2;q) = sum_n f_p1(n) f_p2(n) / n^q`` where ``f_p`` is the partial zeta sum
``zeta_n(p)`` or, for a barred exponent, the alternating partial sum ``L_n(p)``.
A barred outer exponent puts ``(-1)^(n-1)`` in the summand.

Evaluation sums the first N terms directly and closes the remainder with the
large-n expansion of the summand (see :mod:`eulersums.asymptotic`), so the
cutoff stays in the tens rather than growing with the requested digits.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
from mpmath import mp, mpf

from . import asymptotic as asy
from .numerics import (
    DomainError,
    NumericalResult,
    PrecisionContext,
    PrecisionUnreachable,
    digamma_shifted,
    hurwitz_zeta,
    polylog_value,
    to_mpf,
    zeta_value,
    zetabar_value,
)

__all__ = [
    "SumSignature",
    "DivergentSum",
    "PartialSumTable",
    "Factor",
    "partial_zeta",
    "partial_alt",
    "partial_power",
    "weighted_series",
    "euler_sum_value",
    "linear_sum",
    "cyclic_triple_residual",
    "kernel_integral_residual",
    "log_moment_residual",
    "log_moment_polylog_residual",
    "generating_function_residual",
    "hurwitz_weighted_residual",
    "hurwitz_weighted_lhs",
    "hurwitz_weighted_rhs",
    "log_moment_polylog",
]


class DivergentSum(DomainError):
    """The requested series does not converge."""


@dataclass(frozen=True)
class SumSignature:
    """Inner exponents (each possibly alternating) and the outer exponent.

    The inner list is kept sorted by ``(exponent, alternating)`` so equal sums
    compare equal; ``S(3,2;4)`` and ``S(2,3;4)`` are the same signature.
    """

    inner: tuple[tuple[int, bool], ...]
    outer_exponent: int
    outer_alternating: bool = False

    def __post_init__(self) -> None:
        inner = tuple(sorted((int(p), bool(b)) for p, b in self.inner))
        object.__setattr__(self, "inner", inner)
        if len(inner) > 2:
            raise ValueError("only depth 0, 1 and 2 sums are supported")
        for p, _ in inner:
            if p < 1:
                raise ValueError(f"inner exponents must be positive, got {p}")
        if self.outer_exponent < 1:
            raise ValueError(f"outer exponent must be positive, got {self.outer_exponent}")
        if not self.outer_alternating and self.outer_exponent < 2:
            raise DivergentSum(
                f"{self} diverges: a non-alternating outer sum needs exponent >= 2"
            )

    @classmethod
    def of(cls, *args: int) -> "SumSignature":
        """``of(1, 3, 2)`` is S(1,3;2); negative integers mark alternating slots."""
        if not args:
            raise ValueError("need at least the outer exponent")
        *inner, outer = args
        return cls(tuple((abs(p), p < 0) for p in inner), abs(outer), outer < 0)

    @property
    def depth(self) -> int:
        return len(self.inner)

    @property
    def weight(self) -> int:
        return sum(p for p, _ in self.inner) + self.outer_exponent

    @property
    def is_alternating(self) -> bool:
        return self.outer_alternating or any(b for _, b in self.inner)

    def sort_key(self) -> tuple:
        return (self.depth, self.weight, self.inner, self.outer_exponent, self.outer_alternating)

    def __lt__(self, other: "SumSignature") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        inner = ",".join(("b" if b else "") + str(p) for p, b in self.inner)
        outer = ("b" if self.outer_alternating else "") + str(self.outer_exponent)
        return f"S({inner};{outer})"

    def __repr__(self) -> str:
        return f"SumSignature<{self}>"


# ---------------------------------------------------------------- partial sums


def _check_np(n: int, p: int) -> None:
    if n < 0 or p < 1:
        raise ValueError(f"need n >= 0 and p >= 1, got n={n}, p={p}")


def partial_zeta(n: int, p: int) -> Fraction:
    """zeta_n(p) = sum_{j<=n} j^-p, exactly."""
    _check_np(n, p)
    return PARTIALS.zeta(n, p)


def partial_alt(n: int, p: int) -> Fraction:
    """L_n(p) = sum_{j<=n} (-1)^(j-1) j^-p, exactly."""
    _check_np(n, p)
    return PARTIALS.alt(n, p)


def partial_power(n: int, l: int, x, prec: int = 140) -> NumericalResult:
    """zeta_n(l; x) = sum_{k<=n} x^k / k^l; exact (zero bound) for rational x up to rounding."""
    _check_np(n, l)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if abs(x) > 1:
            raise DomainError(f"x must lie in [-1, 1], got {x}")
        if x == 1:
            return NumericalResult.exact(partial_zeta(n, l), prec)
        if x == -1:
            return NumericalResult.exact(-partial_alt(n, l), prec)
        total = sum((x**k / Fraction(k) ** l for k in range(1, n + 1)), Fraction(0))
        return NumericalResult.exact(total, prec)
    with mp.workprec(prec + 16):
        xv = mpf(x)
        if abs(xv) > 1:
            raise DomainError(f"x must lie in [-1, 1], got {x}")
        total = mpmath.fsum(xv**k / mpf(k) ** l for k in range(1, n + 1))
        return NumericalResult(total, abs(total) * mpmath.ldexp(1, -prec) * (n + 2), prec)


class PartialSumTable:
    """Exact prefix arrays of zeta_n(p) and L_n(p), extended on demand up to ``limit``.

    Beyond ``limit`` the table refuses and callers switch to floating
    accumulation; exact rationals get expensive past a thousand terms.
    """

    def __init__(self, limit: int = 1000) -> None:
        self.limit = limit
        self._zeta: dict[int, list[Fraction]] = {}
        self._alt: dict[int, list[Fraction]] = {}
        self._lock = threading.Lock()

    def _extend(self, store: dict, n: int, p: int, alternating: bool) -> Fraction:
        if n > self.limit:
            return self._direct(n, p, alternating)
        row = store.get(p)
        if row is not None and n < len(row):
            return row[n]
        with self._lock:
            row = store.setdefault(p, [Fraction(0)])
            for k in range(len(row), n + 1):
                term = Fraction(1, k**p)
                if alternating and k % 2 == 0:
                    term = -term
                row.append(row[-1] + term)
            return row[n]

    @staticmethod
    def _direct(n: int, p: int, alternating: bool) -> Fraction:
        total = Fraction(0)
        for k in range(1, n + 1):
            t = Fraction(1, k**p)
            total += -t if alternating and k % 2 == 0 else t
        return total

    def zeta(self, n: int, p: int) -> Fraction:
        return self._extend(self._zeta, n, p, False)

    def alt(self, n: int, p: int) -> Fraction:
        return self._extend(self._alt, n, p, True)

    def harmonic(self, n: int) -> Fraction:
        return self.zeta(n, 1)

    def row(self, p: int, alternating: bool = False) -> list[Fraction]:
        store = self._alt if alternating else self._zeta
        return list(store.get(p, [Fraction(0)]))


PARTIALS = PartialSumTable()


# ---------------------------------------------------------------- series engine


@dataclass(frozen=True)
class Factor:
    """One partial-sum factor of a summand, as a function of the summation index n.

    kind ``zeta``: sum_{k<=n} (k+a)^-p;  ``tail``: sum_{k>n} (k+a)^-p;
    ``alt``: L_n(p);  ``power``: sum_{k<=n} x^k / k^p with 0 < |x| < 1.
    """

    kind: str
    p: int
    x: Fraction | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("zeta", "tail", "alt", "power"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.p < 1:
            raise ValueError("factor exponent must be >= 1")
        if self.kind == "tail" and self.p < 2:
            raise DivergentSum("a tail factor needs p >= 2")
        if self.kind == "power":
            if self.x is None or not 0 < abs(self.x) < 1:
                raise ValueError("power factor needs 0 < |x| < 1")


def factor_for(p: int, x) -> tuple[Factor | None, int]:
    """zeta_n(p; x) as (factor, sign); ``None`` means the factor is identically zero."""
    x = Fraction(x)
    if x == 1:
        return Factor("zeta", p), 1
    if x == -1:
        return Factor("alt", p), -1
    if x == 0:
        return None, 1
    if abs(x) > 1:
        raise DomainError(f"argument must lie in [-1, 1], got {x}")
    return Factor("power", p, x), 1


def _factor_constant(f: Factor, shift: Fraction, ctx: PrecisionContext) -> NumericalResult:
    if f.kind in ("zeta", "tail"):
        if f.p == 1:
            return -digamma_shifted(shift, ctx)
        return hurwitz_zeta(f.p, shift + 1, ctx)
    if f.kind == "alt":
        return zetabar_value(f.p, ctx)
    return polylog_value(f.p, f.x, ctx)


def _factor_expansion(f: Factor, const: mpf, order: int) -> asy.Expansion:
    if f.kind == "zeta":
        if f.p == 1:
            return asy.harmonic_expansion(const, order)
        return asy.Expansion.constant(const, order) - asy.zeta_tail_expansion(f.p, order)
    if f.kind == "tail":
        return asy.zeta_tail_expansion(f.p, order)
    if f.kind == "alt":
        return asy.Expansion.constant(const, order) - asy.alternating_tail_expansion(f.p, order)
    return asy.Expansion.constant(const, order)


def _series_once(
    factors: Sequence[Factor],
    q: int,
    outer: Fraction,
    shift: Fraction,
    ctx: PrecisionContext,
    N: int,
    order: int,
) -> NumericalResult:
    prec = mp.prec
    const_results = [_factor_constant(f, shift, ctx) for f in factors]
    consts = [c.value for c in const_results]
    # d(series)/d(constant i), estimated from the direct part
    sensitivity = [mpf(0)] * len(factors)
    a = to_mpf(shift)
    running = [mpf(0)] * len(factors)
    ov = to_mpf(outer)
    geometric = abs(outer) < 1
    direct = mpf(0)
    biggest = mpf(0)
    opow = mpf(1)
    xs = [to_mpf(f.x) if f.kind == "power" else None for f in factors]
    xpow = [mpf(1)] * len(factors)
    for n in range(1, N + 1):
        x = n + a
        for i, f in enumerate(factors):
            if f.kind == "zeta" or f.kind == "tail":
                running[i] += x ** (-f.p)
            elif f.kind == "alt":
                t = mpf(n) ** (-f.p)
                running[i] += t if n % 2 else -t
            else:
                xpow[i] *= xs[i]
                running[i] += xpow[i] / mpf(n) ** f.p
        opow *= ov
        base = opow * x ** (-q)
        values = [consts[i] - running[i] if f.kind == "tail" else running[i] for i, f in enumerate(factors)]
        term = base
        for v in values:
            term *= v
        for i in range(len(factors)):
            others = abs(base)
            for j, v in enumerate(values):
                if j != i:
                    others *= abs(v)
            sensitivity[i] += others
        direct += term
        biggest = max(biggest, abs(term))
    rounding = (abs(direct) + biggest) * mpmath.ldexp(1, -prec) * (4 * N + 16)
    # the expansion reuses the constants beyond N, hence the factor two
    rounding += 2 * sum((c.bound * w for c, w in zip(const_results, sensitivity)), mpf(0))
    if geometric:
        # remaining terms: |outer|^n n^-q times factors bounded by (1 + ln n) each
        r = abs(ov)
        growth = (1 + mpmath.log(N + 1)) ** len(factors) if factors else mpf(1)
        tail = r ** (N + 1) * growth / (1 - r) ** 2
        return NumericalResult(direct, tail + rounding, ctx.working_prec)

    expansion = asy.Expansion.constant(1, order)
    for f, c in zip(factors, consts):
        expansion = expansion * _factor_expansion(f, c, order)
    expansion = expansion * asy.Expansion({(1 if outer == -1 else 0, q, 0): mpf(1)}, order)

    tol = ctx.inner_tolerance
    tiny = mpf(10) ** (-(ctx.working_dps // 2))
    x0 = N + 1 + shift
    tail = mpf(0)
    em_bound = mpf(0)
    top = mpf(0)
    terms = expansion.terms
    share = tol / ((len(terms) + 1) * 64)
    xf = to_mpf(x0)
    lnx = mpmath.log(xf)
    skipped = mpf(0)
    for (alt, s, j), c in sorted(terms.items()):
        if not c:
            continue
        if (alt == 0 and s <= 1) or (alt == 1 and s <= 0):
            if abs(c) > tiny:
                raise DivergentSum(
                    f"series with summand ~ {'(-1)^n ' if alt else ''}n^-{s} ln^{j} n diverges"
                )
            continue
        if alt and shift:
            raise ValueError("alternating factors do not combine with a shift")
        # crude size of this term's tail: |c| x0^(1-s) ln^j x0 (times 2 for the alternating case)
        size = abs(c) * 2 * xf ** (1 - s) * (1 + lnx) ** j
        if size < share * mpmath.ldexp(1, -20):
            skipped += size
            continue
        v, b = asy.power_log_tail(alt, s, j, x0, share / max(1, abs(c)))
        tail += c * v
        em_bound += abs(c) * b
        if s > order - 2:
            top += abs(c * v)
    # the first neglected orders are about as large as the last kept ones
    bound = em_bound + top + skipped + rounding + mpmath.ldexp(abs(tail), -prec) * (len(terms) + 4)
    for f in factors:
        if f.kind == "power":
            # the power factor was replaced by its limit Li(x) beyond n = N
            bound += abs(to_mpf(f.x)) ** (N + 1) / (1 - abs(to_mpf(f.x))) * (N + 2)
    return NumericalResult(direct + tail, bound, ctx.working_prec)


def weighted_series(
    factors: Sequence[Factor],
    q: int,
    ctx: PrecisionContext,
    outer=1,
    shift=0,
) -> NumericalResult:
    """sum_{n>=1} outer^n (n+a)^-q prod_i f_i(n), with ``a = shift``.

    ``outer`` is 1, -1 (giving (-1)^n) or a rational of modulus below one.
    """
    outer = Fraction(outer)
    shift = Fraction(shift)
    if abs(outer) > 1:
        raise DomainError(f"outer argument must lie in [-1, 1], got {outer}")
    if shift <= -1:
        raise DomainError(f"shift must exceed -1, got {shift}")
    if outer == 0:
        return NumericalResult(mpf(0), mpf(0), ctx.working_prec)
    if outer == 1 and q < 1:
        raise DivergentSum("outer exponent must be positive")
    dps = ctx.working_dps
    N = max(30, dps)
    need = [f.x for f in factors if f.kind == "power"]
    if abs(outer) < 1:
        need.append(outer)
    for x in need:
        digits = -math.log10(abs(float(x)))
        N = max(N, int((dps + 8) / digits) + 8)
    order = dps + 8
    with mp.workprec(ctx.working_prec + 32):
        best = None
        while True:
            res = _series_once(factors, q, outer, shift, ctx, N, order)
            if res.bound <= ctx.tolerance / 10**4:
                return res
            best = res
            if 2 * N > ctx.max_terms:
                raise PrecisionUnreachable(
                    f"series did not reach 1e-{ctx.target_digits} within {ctx.max_terms} terms",
                    best,
                )
            N *= 2


_SUM_CACHE: dict[tuple, NumericalResult] = {}
_SUM_LOCK = threading.Lock()


def euler_sum_value(sig: SumSignature, ctx: PrecisionContext) -> NumericalResult:
    """Value of the Euler sum ``sig`` to within ``10^-target_digits``."""
    key = (sig, ctx.working_dps)
    hit = _SUM_CACHE.get(key)
    if hit is not None:
        return hit
    if sig.depth == 0:
        res = (zetabar_value if sig.outer_alternating else zeta_value)(sig.outer_exponent, ctx)
    else:
        factors = []
        sign = 1
        for p, alt in sig.inner:
            factors.append(Factor("alt" if alt else "zeta", p))
        if sig.outer_alternating:
            # (-1)^(n-1) = -(-1)^n
            sign = -1
        res = weighted_series(factors, sig.outer_exponent, ctx, outer=-1 if sign < 0 else 1)
        if sign < 0:
            res = -res
    with _SUM_LOCK:
        _SUM_CACHE[key] = res
    return res


def linear_sum(p: int, q: int, ctx: PrecisionContext) -> NumericalResult:
    """S(p;q) with signed arguments (negative = alternating)."""
    return euler_sum_value(SumSignature.of(p, q), ctx)


# ---------------------------------------------------------------- identity checks


def _plain_series(terms: Iterable[tuple[Sequence[tuple[int, Fraction]], int, Fraction]], ctx):
    """Sum of several ``sum_n prod zeta_n(p; x) z^n / n^c`` series."""
    total = NumericalResult(mpf(0), mpf(0), ctx.working_prec)
    for inner, c, z in terms:
        factors = []
        sign = 1
        zero = False
        for p, x in inner:
            f, s = factor_for(p, x)
            if f is None:
                zero = True
                break
            factors.append(f)
            sign *= s
        if zero:
            continue
        z = Fraction(z)
        res = weighted_series(factors, c, ctx, outer=z)
        total = total + (res if sign > 0 else -res)
    return total


def cyclic_triple_residual(l1: int, l2: int, m: int, x, y, z, ctx: PrecisionContext) -> NumericalResult:
    """LHS - RHS of the three-term cyclic relation between products of two partial sums.

    sum_n [zeta_n(l1;x) zeta_n(l2;y) z^n/n^m + zeta_n(l1;x) zeta_n(m;z) y^n/n^l2
           + zeta_n(l2;y) zeta_n(m;z) x^n/n^l1]
      = sum_n [zeta_n(m;z) (xy)^n/n^(l1+l2) + zeta_n(l1;x) (yz)^n/n^(m+l2)
               + zeta_n(l2;y) (xz)^n/n^(l1+m)]
        + Li_m(z) Li_l1(x) Li_l2(y) - Li_(l1+l2+m)(xyz)
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    for name, k, v in (("l1", l1, x), ("l2", l2, y), ("m", m, z)):
        if k < 1:
            raise DomainError(f"{name} must be a positive integer")
        if v == 1 and k == 1:
            raise DivergentSum(f"{name} = 1 with argument 1 diverges")
    lhs = _plain_series(
        [
            (((l1, x), (l2, y)), m, z),
            (((l1, x), (m, z)), l2, y),
            (((l2, y), (m, z)), l1, x),
        ],
        ctx,
    )
    rhs = _plain_series(
        [
            (((m, z),), l1 + l2, x * y),
            (((l1, x),), m + l2, y * z),
            (((l2, y),), l1 + m, x * z),
        ],
        ctx,
    )
    rhs = rhs + polylog_value(m, z, ctx) * polylog_value(l1, x, ctx) * polylog_value(l2, y, ctx)
    rhs = rhs - polylog_value(l1 + l2 + m, x * y * z, ctx)
    return lhs - rhs


def _quad(f, a, b, ctx: PrecisionContext) -> NumericalResult:
    with mp.workdps(ctx.working_dps + 10):
        v, err = mpmath.quad(f, [a, b], error=True, maxdegree=10)
        return NumericalResult(mpf(v), abs(mpf(err)), ctx.working_prec)


def _closed_kernel(n: int, p: int, x: Fraction, ctx: PrecisionContext) -> NumericalResult:
    """int_0^x t^(n-1) Li_p(t) dt after repeated integration by parts."""
    total = NumericalResult(mpf(0), mpf(0), ctx.working_prec)
    xn = Fraction(x) ** n
    for i in range(1, p):
        coef = Fraction((-1) ** (i - 1), n**i) * xn
        total = total + polylog_value(p + 1 - i, x, ctx) * coef
    with mp.workprec(ctx.working_prec + 16):
        log_term = mpmath.log(1 - to_mpf(x)) * to_mpf(xn - 1)
    sign = (-1) ** p
    total = total + NumericalResult(log_term, abs(log_term) * mpmath.ldexp(1, -ctx.working_prec), ctx.working_prec) * Fraction(sign, n**p)
    total = total - partial_power(n, 1, x, ctx.working_prec) * Fraction(sign, n**p)
    return total


def kernel_integral_residual(n: int, p: int, x, ctx: PrecisionContext) -> NumericalResult:
    """Quadrature of int_0^x t^(n-1) Li_p(t) dt minus its closed form in polylogs."""
    x = Fraction(x)
    if n < 1 or p < 2 or not -1 < x < 1:
        raise DomainError("kernel integral needs n >= 1, p >= 2, -1 < x < 1")
    if x == 0:
        return NumericalResult(mpf(0), mpf(0), ctx.working_prec)
    quad = _quad(lambda t: t ** (n - 1) * mpmath.polylog(p, t), 0, to_mpf(x), ctx)
    return quad - _closed_kernel(n, p, x, ctx)


def _log_moment_closed(n: int, m: int, ctx: PrecisionContext) -> NumericalResult:
    """int_0^1 x^(n-1) ln^m x ln(1-x) dx in partial sums and zeta values."""
    total = NumericalResult.exact(partial_zeta(n, 1) / Fraction(n) ** (m + 1), ctx.working_prec)
    for j in range(1, m + 1):
        r = zeta_value(j + 1, ctx) - partial_zeta(n, j + 1)
        total = total - r * Fraction(1, n ** (m + 1 - j))
    return total * ((-1) ** (m + 1) * math.factorial(m))


def log_moment_residual(n: int, m: int, ctx: PrecisionContext) -> NumericalResult:
    """Quadrature minus closed form for int_0^1 x^(n-1) ln^m x ln(1-x) dx."""
    if n < 1 or m < 0:
        raise DomainError("log moment needs n >= 1 and m >= 0")
    quad = _quad(lambda t: t ** (n - 1) * mpmath.log(t) ** m * mpmath.log(1 - t), 0, 1, ctx)
    return quad - _log_moment_closed(n, m, ctx)


def log_moment_polylog(n: int, m: int, p: int, ctx: PrecisionContext) -> NumericalResult:
    """int_0^1 x^(n-1) ln^m x Li_p(x) dx from the recurrence lowering m by one."""
    if n < 1 or m < 0 or p < 1:
        raise DomainError("need n >= 1, m >= 0, p >= 1")
    wp = ctx.working_prec
    h = partial_zeta(n, 1)
    if m == 0:
        if p == 1:
            return NumericalResult.exact(h / n, wp)
        total = NumericalResult.exact(-(-1) ** p * h / Fraction(n) ** p, wp)
        for i in range(1, p):
            total = total + zeta_value(p + 1 - i, ctx) * Fraction((-1) ** (i - 1), n**i)
        return total
    total = NumericalResult(mpf(0), mpf(0), wp)
    for i in range(1, p):
        total = total + log_moment_polylog(n, m - 1, p + 1 - i, ctx) * Fraction(m * (-1) ** i, n**i)
    pref = Fraction(math.factorial(m) * (-1) ** (m + p - 1), n**p)
    inner = NumericalResult.exact(partial_zeta(n, m + 1) + h / Fraction(n) ** m, wp)
    for j in range(1, m):
        r = zeta_value(j + 1, ctx) - partial_zeta(n, j + 1)
        inner = inner - r * Fraction(1, n ** (m - j))
    inner = inner - zeta_value(m + 1, ctx)
    return total + inner * pref


def log_moment_polylog_residual(n: int, m: int, p: int, ctx: PrecisionContext) -> NumericalResult:
    """Quadrature minus recurrence value for int_0^1 x^(n-1) ln^m x Li_p(x) dx."""
    quad = _quad(lambda t: t ** (n - 1) * mpmath.log(t) ** m * mpmath.polylog(p, t), 0, 1, ctx)
    return quad - log_moment_polylog(n, m, p, ctx)


def generating_function_residual(m: int, x, N: int, ctx: PrecisionContext) -> tuple[NumericalResult, mpf]:
    """(sum_{n<=N} zeta_n(m) x^n - Li_m(x)/(1-x), bound on the omitted tail)."""
    x = Fraction(x)
    if not -1 < x < 1 or m < 1 or N < 1:
        raise DomainError("need |x| < 1, m >= 1, N >= 1")
    head = sum((partial_zeta(n, m) * x**n for n in range(1, N + 1)), Fraction(0))
    full = polylog_value(m, x, ctx) * NumericalResult.exact(1 / (1 - x), ctx.working_prec)
    ax = to_mpf(abs(x))
    # zeta_n(m) <= 1 + ln n, and sum_{n>N} (1 + ln n) r^n <= (1 + ln(N+1)) r^(N+1) / (1-r)^2
    with mp.workprec(ctx.working_prec):
        tail = (1 + mpmath.log(N + 1)) * ax ** (N + 1) / (1 - ax) ** 2
    return NumericalResult.exact(head, ctx.working_prec) - full, tail


def _hurwitz_args(m: int, p: int, a) -> Fraction:
    a = Fraction(a)
    if m < 2 or p < 2 or a <= -1:
        raise DomainError("need m, p >= 2 and a > -1")
    return a


def hurwitz_weighted_lhs(m: int, p: int, a, ctx: PrecisionContext) -> NumericalResult:
    """sum_n [zeta(m,a+1) zeta_n(p,a+1) - zeta(p,a+1) zeta_n(m,a+1)] / (n+a)."""
    a = _hurwitz_args(m, p, a)
    zm = hurwitz_zeta(m, a + 1, ctx)
    zp = hurwitz_zeta(p, a + 1, ctx)
    # zeta(m) zeta_n(p) - zeta(p) zeta_n(m) = zeta(p) r_n(m) - zeta(m) r_n(p)
    return zp * weighted_series([Factor("tail", m)], 1, ctx, shift=a) - zm * weighted_series(
        [Factor("tail", p)], 1, ctx, shift=a
    )


def hurwitz_weighted_rhs(m: int, p: int, a, ctx: PrecisionContext) -> NumericalResult:
    """zeta(p,a+1) T(m) - zeta(m,a+1) T(p) + zeta(m,a+1) zeta(p+1,a+1) - zeta(m+1,a+1) zeta(p,a+1).

    T(s) = sum_n zeta_n(1,a+1)/(n+a)^s.
    """
    a = _hurwitz_args(m, p, a)
    zm = hurwitz_zeta(m, a + 1, ctx)
    zp = hurwitz_zeta(p, a + 1, ctx)
    rhs = zp * weighted_series([Factor("zeta", 1)], m, ctx, shift=a) - zm * weighted_series(
        [Factor("zeta", 1)], p, ctx, shift=a
    )
    return rhs + zm * hurwitz_zeta(p + 1, a + 1, ctx) - hurwitz_zeta(m + 1, a + 1, ctx) * zp


def hurwitz_weighted_residual(m: int, p: int, a, ctx: PrecisionContext) -> NumericalResult:
    """Residual of the shifted identity between tails of partial Hurwitz sums.

    sum_n [zeta(m,a+1) zeta_n(p,a+1) - zeta(p,a+1) zeta_n(m,a+1)] / (n+a)
      = zeta(p,a+1) sum_n zeta_n(1,a+1)/(n+a)^m - zeta(m,a+1) sum_n zeta_n(1,a+1)/(n+a)^p
        + zeta(m,a+1) zeta(p+1,a+1) - zeta(m+1,a+1) zeta(p,a+1)
    """
    return hurwitz_weighted_lhs(m, p, a, ctx) - hurwitz_weighted_rhs(m, p, a, ctx)
