"""Independent reference computations used only by the tests.

None of these share code with the package: Bernoulli numbers come from the
Akiyama-Tanigawa algorithm, Euler sums from a plain head sum plus an
Euler-Maclaurin tail whose integral is done by quadrature on the analytic
continuation of the partial sums (digamma and Hurwitz zeta from mpmath).
"""
from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp, mpf


def bernoulli_at(n: int) -> Fraction:
    """B_n with B_1 = -1/2 via the Akiyama-Tanigawa triangle."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    # the triangle yields B_1 = +1/2
    return -a[0] if n == 1 else a[0]


def _partial(p: int, x):
    if p == 1:
        return mpmath.digamma(x + 1) + mpmath.euler
    return mpmath.zeta(p) - mpmath.zeta(p, x + 1)


def euler_sum_oracle(inner: tuple[int, ...], q: int, dps: int = 30, head: int = 400) -> mpf:
    """sum_n prod_i zeta_n(p_i) / n^q for non-alternating arguments, good to about 1e-18."""
    with mp.workdps(dps):
        def f(x):
            return mpmath.fprod([_partial(p, x) for p in inner]) / x**q

        total = mpmath.fsum(f(n) for n in range(1, head + 1))
        tail = (
            mpmath.quad(f, [head, 2 * head, mpmath.inf])
            - f(head) / 2
            - mpmath.diff(f, head) / 12
            + mpmath.diff(f, head, 3) / 720
        )
        return +(total + tail)


def partial_zeta_brute(n: int, p: int) -> Fraction:
    return sum((Fraction(1, k**p) for k in range(1, n + 1)), Fraction(0))
