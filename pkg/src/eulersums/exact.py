"""Exact rational substrate: Bernoulli numbers and the even zeta closed form."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli",
    "euler_at_zero",
    "even_zeta_ratio",
    "zeta_even_closed",
]


class BernoulliCache:
    """Dense memo of B_0..B_n, extended on demand with the binomial recurrence."""

    def __init__(self) -> None:
        self._table: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < len(self._table):
            return self._table[n]
        with self._lock:
            table = self._table
            for k in range(len(table), n + 1):
                if k > 1 and k % 2 == 1:
                    table.append(Fraction(0))
                    continue
                # sum_{j=0}^{k} C(k+1, j) B_j = 0
                s = sum(comb(k + 1, j) * table[j] for j in range(k))
                table.append(-s / (k + 1))
            return table[n]

    def __len__(self) -> int:
        return len(self._table)


_BERNOULLI = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """Return B_n with the convention x/(e^x - 1) = sum B_k x^k / k!, so B_1 = -1/2."""
    if n < 0:
        raise ValueError(f"bernoulli index must be >= 0, got {n}")
    return _BERNOULLI.get(n)


def euler_at_zero(k: int) -> Fraction:
    """E_k(0), the Euler polynomial at zero: 2/(e^t + 1) = sum E_k(0) t^k / k!."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1)
    return -2 * (2 ** (k + 1) - 1) * bernoulli(k + 1) / (k + 1)


def even_zeta_ratio(two_m: int) -> Fraction:
    """Rational r with zeta(2m) = r * pi^(2m)."""
    if two_m <= 0 or two_m % 2:
        raise ValueError(f"expected a positive even integer, got {two_m}")
    m = two_m // 2
    # zeta(2m) = (-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)
    return (-1) ** (m + 1) * bernoulli(two_m) * 2 ** (two_m - 1) / factorial(two_m)


def zeta_even_closed(two_m: int):
    """zeta(2m) as a rational multiple of the pi^(2m) monomial."""
    from .symbolic import Atom, Expression

    if not isinstance(two_m, int) or two_m < 2 or two_m % 2:
        raise ValueError(f"zeta_even_closed needs an even integer >= 2, got {two_m!r}")
    return Expression.atom(Atom.pi()) ** two_m * even_zeta_ratio(two_m)
