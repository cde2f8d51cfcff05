"""Large-n expansions of partial sums and closed tails of power-log series.

A summand such as ``H_n zeta_n(3) / n^2`` has, for large ``x = n + a``, an
asymptotic expansion in the basis ``sign^n * x^(-s) * ln(x)^j`` with
``sign`` either ``+1`` or ``-1``.  This module builds those expansions for the
partial-sum factors and sums each basis element from a cutoff to infinity
(Euler-Maclaurin for the non-alternating part, Boole summation with Euler
polynomial coefficients for the alternating part).
"""
from __future__ import annotations

import math
import threading
from collections import defaultdict
from fractions import Fraction

import mpmath
from mpmath import mpf

from .exact import bernoulli, euler_at_zero

# (alternating flag, power s, log power j) -> coefficient of sign^n x^-s ln^j x
Key = tuple[int, int, int]


class Expansion:
    """Truncated expansion; orders s > ``max_order`` are discarded on multiplication."""

    __slots__ = ("terms", "max_order")

    def __init__(self, terms: dict[Key, mpf] | None = None, max_order: int = 40):
        self.terms = dict(terms or {})
        self.max_order = max_order

    @classmethod
    def constant(cls, c, max_order: int) -> "Expansion":
        return cls({(0, 0, 0): mpf(c)} if c else {}, max_order)

    def __add__(self, other: "Expansion") -> "Expansion":
        out = defaultdict(mpf, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return Expansion(dict(out), min(self.max_order, other.max_order))

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + other.scale(-1)

    def scale(self, c) -> "Expansion":
        c = mpf(c) if not isinstance(c, mpf) else c
        return Expansion({k: v * c for k, v in self.terms.items()}, self.max_order)

    def __mul__(self, other: "Expansion") -> "Expansion":
        cap = min(self.max_order, other.max_order)
        out: dict[Key, mpf] = defaultdict(mpf)
        for (a1, s1, j1), c1 in self.terms.items():
            for (a2, s2, j2), c2 in other.terms.items():
                s = s1 + s2
                if s > cap:
                    continue
                out[((a1 + a2) & 1, s, j1 + j2)] += c1 * c2
        return Expansion(dict(out), cap)


def _rising(s: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= s + i
    return out


def zeta_tail_expansion(p: int, max_order: int) -> Expansion:
    """sum_{k>n} (k+a)^-p as a series in x = n + a (p >= 2)."""
    if p < 2:
        raise ValueError("zeta tail needs p >= 2")
    terms: dict[Key, mpf] = {}
    terms[(0, p - 1, 0)] = mpf(1) / (p - 1)
    if p <= max_order:
        terms[(0, p, 0)] = mpf(-1) / 2
    j = 1
    while p + 2 * j - 1 <= max_order:
        c = bernoulli(2 * j) / math.factorial(2 * j) * _rising(p, 2 * j - 1)
        terms[(0, p + 2 * j - 1, 0)] = mpf(c.numerator) / c.denominator
        j += 1
    return Expansion(terms, max_order)


def harmonic_expansion(constant, max_order: int) -> Expansion:
    """psi(x + 1) + constant ~ ln x + constant + 1/(2x) - sum B_2j / (2j x^2j)."""
    terms: dict[Key, mpf] = {(0, 0, 1): mpf(1)}
    if constant:
        terms[(0, 0, 0)] = mpf(constant)
    if max_order >= 1:
        terms[(0, 1, 0)] = mpf(1) / 2
    j = 1
    while 2 * j <= max_order:
        c = bernoulli(2 * j) / (2 * j)
        terms[(0, 2 * j, 0)] = -mpf(c.numerator) / c.denominator
        j += 1
    return Expansion(terms, max_order)


def alternating_tail_expansion(p: int, max_order: int) -> Expansion:
    """sum_{k>n} (-1)^(k-1) k^-p = (-1)^n [g - sum_k E_k(0)/(2 k!) g^(k)], g = n^-p."""
    terms: dict[Key, mpf] = {}
    k = 0
    while p + k <= max_order:
        e = euler_at_zero(k)
        c = Fraction(1 if k == 0 else 0) - e * (-1) ** k * _rising(p, k) / (2 * math.factorial(k))
        if c:
            terms[(1, p + k, 0)] = mpf(c.numerator) / c.denominator
        k += 1
    return Expansion(terms, max_order)


_TAIL_CACHE: dict[tuple, tuple[mpf, mpf]] = {}
_TAIL_LOCK = threading.Lock()


def _derivative_step(coeffs: list, a) -> list:
    """d/dx of x^-a sum c_i ln^i x, returned as coefficients of x^-(a+1)."""
    out = [-a * c for c in coeffs]
    for i in range(1, len(coeffs)):
        out[i - 1] += i * coeffs[i]
    return out


def _eval_poly_log(coeffs: list, lnx: mpf) -> mpf:
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * lnx + c
    return acc


def power_log_tail(alternating: int, s: int, j: int, x0, eps: mpf) -> tuple[mpf, mpf]:
    """sum_{i>=0} sign^(x0+i) (x0+i)^-s ln^j(x0+i) from derivatives at x0 alone.

    ``x0`` must be an integer when ``alternating`` is set (the sign is (-1)^n).
    Returns ``(value, bound)`` with bound the first omitted correction.
    """
    prec = mpmath.mp.prec
    key = (alternating, s, j, Fraction(x0) if not isinstance(x0, mpf) else str(x0), prec)
    hit = _TAIL_CACHE.get(key)
    if hit is not None:
        return hit
    xv = mpf(Fraction(x0).numerator) / Fraction(x0).denominator if not isinstance(x0, mpf) else x0
    lnx = mpmath.log(xv)
    coeffs = [mpf(0)] * j + [mpf(1)]
    a = s  # current power: derivative r has x^-(s+r)
    g0 = _eval_poly_log(coeffs, lnx) * xv ** (-s)
    if not alternating:
        if s <= 1:
            raise ValueError("non-alternating power-log tail diverges for s <= 1")
        # closed-form integral from x0 to infinity
        integral = mpf(0)
        for i in range(j + 1):
            integral += (
                mpf(math.factorial(j)) / math.factorial(j - i)
                * lnx ** (j - i) / mpf(s - 1) ** (i + 1)
            )
        integral *= xv ** (1 - s)
        value = integral + g0 / 2
        prev = None
        r = 1
        bound = mpf(0)
        while True:
            coeffs = _derivative_step(coeffs, a)
            a += 1
            # now coeffs describe derivative of order 2r-1
            deriv = _eval_poly_log(coeffs, lnx) * xv ** (-a)
            b = bernoulli(2 * r)
            term = -mpf(b.numerator) / b.denominator / math.factorial(2 * r) * deriv
            if prev is not None and abs(term) >= abs(prev):
                bound = abs(term)
                break
            if abs(term) < eps:
                bound = abs(term)
                break
            value += term
            prev = term
            # advance to the next odd derivative
            coeffs = _derivative_step(coeffs, a)
            a += 1
            r += 1
    else:
        if s == 0 and j == 0:
            raise ValueError("alternating constant does not sum")
        # sum_{i>=0} (-1)^i g(x0+i) = sum_k E_k(0) / (2 k!) g^(k)(x0)
        value = g0 / 2
        prev = None
        k = 1
        while True:
            coeffs = _derivative_step(coeffs, a)
            a += 1
            e = euler_at_zero(k)
            if e:
                deriv = _eval_poly_log(coeffs, lnx) * xv ** (-a)
                term = mpf(e.numerator) / e.denominator / (2 * math.factorial(k)) * deriv
                if prev is not None and abs(term) >= abs(prev):
                    bound = abs(term)
                    break
                if abs(term) < eps:
                    bound = abs(term)
                    break
                value += term
                prev = term
            k += 1
        if int(Fraction(x0)) % 2:
            value = -value
    with _TAIL_LOCK:
        _TAIL_CACHE[key] = (value, bound)
    return value, bound


def clear_tail_cache() -> None:
    with _TAIL_LOCK:
        _TAIL_CACHE.clear()
