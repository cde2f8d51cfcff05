"""Arbitrary-precision reals with an absolute error bound, and the constants the sums need.

Every value is an mpmath ``mpf`` carried together with a non-negative bound on its
absolute error (midpoint/radius style).  Arithmetic on :class:`NumericalResult`
propagates bounds and adds a rounding slack of one unit in the last place.

mpmath keeps its working precision in a process-global context, so every public
function here runs inside ``mp.workprec`` and results remember the precision they
were computed at.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .exact import bernoulli

__all__ = [
    "DomainError",
    "PrecisionUnreachable",
    "PrecisionContext",
    "NumericalResult",
    "ConstantCache",
    "CONSTANTS",
    "zeta_value",
    "zetabar_value",
    "ln2_value",
    "pi_value",
    "gamma_value",
    "polylog_half",
    "polylog_value",
    "hurwitz_zeta",
    "hurwitz_tail",
    "digamma_shifted",
    "to_mpf",
]


class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined or convergent."""


class PrecisionUnreachable(ArithmeticError):
    """The term budget ran out before the requested bound was met."""

    def __init__(self, message: str, best_effort: "NumericalResult | None" = None):
        super().__init__(message)
        self.best_effort = best_effort


@dataclass(frozen=True)
class PrecisionContext:
    target_digits: int = 30
    guard_digits: int = 10
    max_terms: int = 10**6

    def __post_init__(self) -> None:
        if self.target_digits < 10:
            raise ValueError("target_digits must be >= 10")
        if self.guard_digits < 10:
            raise ValueError("guard_digits must be >= 10")
        if self.max_terms < 1000:
            raise ValueError("max_terms must be >= 1000")

    @property
    def working_dps(self) -> int:
        return self.target_digits + self.guard_digits

    @property
    def working_prec(self) -> int:
        return int(self.working_dps * 3.3219280948873626) + 8

    @property
    def tolerance(self) -> mpf:
        """Absolute bound every delivered constant must meet."""
        return mpf(10) ** (-self.target_digits)

    @property
    def inner_tolerance(self) -> mpf:
        return mpf(10) ** (-self.working_dps)


def _ulp(x: mpf, prec: int) -> mpf:
    if not x:
        return mpf(0)
    return mpmath.ldexp(abs(x), 1 - prec)


def to_mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


@dataclass(frozen=True)
class NumericalResult:
    """``value`` with ``|value - exact| <= abs_error_bound``."""

    value: mpf
    abs_error_bound: mpf
    prec: int = field(default=140, compare=False)

    def __post_init__(self) -> None:
        if self.abs_error_bound < 0:
            raise ValueError("error bound must be non-negative")
        # later operations round to ``prec``; do it now and account for it
        with mp.workprec(self.prec):
            v = +self.value
        if v != self.value:
            with mp.workprec(self.prec + 20):
                slack = abs(self.value - v)
                object.__setattr__(self, "abs_error_bound", self.abs_error_bound + slack * 2)
            object.__setattr__(self, "value", v)

    @classmethod
    def exact(cls, x, prec: int = 140) -> "NumericalResult":
        with mp.workprec(prec):
            v = to_mpf(x)
            err = mpf(0)
            if isinstance(x, Fraction) and x.denominator & (x.denominator - 1):
                err = _ulp(v, prec)
            return cls(v, err, prec)

    @property
    def bound(self) -> mpf:
        return self.abs_error_bound

    def _coerce(self, other) -> "NumericalResult":
        if isinstance(other, NumericalResult):
            return other
        return NumericalResult.exact(other, self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        prec = max(self.prec, other.prec)
        with mp.workprec(prec):
            v = self.value + other.value
            return NumericalResult(v, self.bound + other.bound + _ulp(v, prec), prec)

    __radd__ = __add__

    def __neg__(self):
        # mpf negation rounds to the ambient precision, hence the context
        with mp.workprec(self.prec):
            return NumericalResult(-self.value, self.bound, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        prec = max(self.prec, other.prec)
        with mp.workprec(prec):
            v = self.value * other.value
            b = (
                abs(self.value) * other.bound
                + abs(other.value) * self.bound
                + self.bound * other.bound
                + _ulp(v, prec)
            )
            return NumericalResult(v, b, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = NumericalResult.exact(1, self.prec)
        for _ in range(k):
            out = out * self
        return out

    def __abs__(self):
        with mp.workprec(self.prec):
            return NumericalResult(abs(self.value), self.bound, self.prec)

    def digits(self) -> int:
        """Number of correct significant decimal digits the bound justifies."""
        if self.bound == 0:
            return int(self.prec * 0.30103)
        if self.value == 0:
            return 0
        with mp.workprec(self.prec):
            d = -mpmath.log10(self.bound / abs(self.value))
        return max(0, int(mpmath.floor(d)))

    def decimal_places(self) -> int:
        if self.bound == 0:
            return int(self.prec * 0.30103)
        with mp.workprec(self.prec):
            return max(0, int(mpmath.floor(-mpmath.log10(self.bound))))

    def format(self, digits: int | None = None) -> str:
        """Render with at most the certified number of significant digits."""
        d = self.digits()
        if digits is not None:
            d = min(d, digits)
        d = max(d, 1)
        with mp.workprec(self.prec):
            return mpmath.nstr(self.value, d, strip_zeros=False)

    def __str__(self) -> str:
        return f"{self.format()} +/- {mpmath.nstr(self.bound, 3)}"


class ConstantCache:
    """Memo keyed by (kind, params); an entry at dps d serves any request with dps <= d."""

    def __init__(self) -> None:
        self._store: dict[tuple, tuple[int, NumericalResult]] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple, dps: int) -> NumericalResult | None:
        with self._lock:
            hit = self._store.get(key)
        if hit is not None and hit[0] >= dps:
            return hit[1]
        return None

    def put(self, key: tuple, dps: int, value: NumericalResult) -> None:
        with self._lock:
            hit = self._store.get(key)
            if hit is None or hit[0] < dps:
                self._store[key] = (dps, value)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()

    def __len__(self) -> int:
        return len(self._store)


CONSTANTS = ConstantCache()


def _cached(kind: str, params: tuple, ctx: PrecisionContext, compute):
    key = (kind,) + params
    hit = CONSTANTS.get(key, ctx.working_dps)
    if hit is not None:
        return hit
    # extra bits so per-term rounding stays far below the delivered bound
    with mp.workprec(ctx.working_prec + 32):
        res = compute()
    CONSTANTS.put(key, ctx.working_dps, res)
    return res


def _rising(s, k: int):
    out = mpf(1)
    for i in range(k):
        out *= s + i
    return out


def _em_power_tail(s, x0, eps):
    """sum_{k>=0} (x0+k)^(-s) by Euler-Maclaurin at x0 alone.

    Returns (value, bound) where bound is the first omitted correction, which
    dominates the remainder for real s > 1.  Stops early once corrections fall
    below ``eps`` or start to grow.
    """
    s = mpf(s)
    x0 = mpf(x0)
    val = x0 ** (1 - s) / (s - 1) + x0 ** (-s) / 2
    prev = None
    r = 1
    while True:
        term = (
            to_mpf(bernoulli(2 * r)) / math.factorial(2 * r)
            * _rising(s, 2 * r - 1)
            * x0 ** (-s - 2 * r + 1)
        )
        if prev is not None and abs(term) >= abs(prev):
            return val, abs(term)
        if abs(term) < eps:
            return val, abs(term)
        val += term
        prev = term
        r += 1


def hurwitz_zeta(s, a, ctx: PrecisionContext) -> NumericalResult:
    """sum_{n>=0} (n+a)^(-s) for s > 1, a > 0: direct terms plus an Euler-Maclaurin tail."""
    a_f = Fraction(a) if not isinstance(a, mpf) else None
    key_a = a_f if a_f is not None else str(a)

    def compute():
        sv = to_mpf(s) if isinstance(s, Fraction) else mpf(s)
        if sv <= 1:
            raise DomainError(f"hurwitz zeta needs s > 1, got {s}")
        av = to_mpf(a_f) if a_f is not None else mpf(a)
        if av <= 0:
            raise DomainError(f"hurwitz zeta needs a > 0, got {a}")
        goal = ctx.inner_tolerance
        cut = 16
        while True:
            head = mpmath.fsum((av + k) ** (-sv) for k in range(cut))
            tail, err = _em_power_tail(sv, av + cut, goal / 8)
            value = head + tail
            bound = err + _ulp(value, mp.prec) * (cut + 4)
            if bound <= goal * max(1, abs(value)):
                return NumericalResult(value, bound, ctx.working_prec)
            if cut * 2 > ctx.max_terms:
                raise PrecisionUnreachable(
                    f"hurwitz zeta({s}, {a}) needs more than {ctx.max_terms} terms",
                    NumericalResult(value, bound, ctx.working_prec),
                )
            cut *= 2

    return _cached("hurwitz", (s, key_a), ctx, compute)


def zeta_value(s: int, ctx: PrecisionContext) -> NumericalResult:
    """Riemann zeta at an integer s >= 2."""
    if not isinstance(s, int) or s < 2:
        raise DomainError(f"zeta_value needs an integer s >= 2, got {s!r}")
    return hurwitz_zeta(s, 1, ctx)


def hurwitz_tail(p: int, N: int, ctx: PrecisionContext) -> NumericalResult:
    """sum_{k>N} k^(-p) from the Euler-Maclaurin expansion at N+1, no direct summation.

    The bound is the first omitted Bernoulli correction, so small N gives a
    correspondingly loose (but honest) bound.
    """
    if p < 2 or N < 1:
        raise DomainError(f"hurwitz_tail needs p >= 2 and N >= 1, got p={p}, N={N}")

    def compute():
        value, err = _em_power_tail(p, N + 1, ctx.inner_tolerance / 8)
        return NumericalResult(value, err + _ulp(value, mp.prec) * 4, ctx.working_prec)

    return _cached("hurwitz_tail", (p, N), ctx, compute)


def ln2_value(ctx: PrecisionContext) -> NumericalResult:
    return _cached(
        "ln2", (), ctx,
        lambda: NumericalResult(+mpmath.ln2, _ulp(mpmath.ln2, mp.prec), ctx.working_prec),
    )


def pi_value(ctx: PrecisionContext) -> NumericalResult:
    return _cached(
        "pi", (), ctx,
        lambda: NumericalResult(+mpmath.pi, _ulp(mpmath.pi, mp.prec), ctx.working_prec),
    )


def gamma_value(ctx: PrecisionContext) -> NumericalResult:
    """Euler-Mascheroni constant (only the harmonic-number tail expansion uses it)."""
    return _cached(
        "gamma", (), ctx,
        lambda: NumericalResult(+mpmath.euler, _ulp(mpmath.euler, mp.prec), ctx.working_prec),
    )


def zetabar_value(s: int, ctx: PrecisionContext) -> NumericalResult:
    """Alternating zeta sum (-1)^(n-1) n^(-s); ln 2 at s = 1."""
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"zetabar_value needs an integer s >= 1, got {s!r}")
    if s == 1:
        return ln2_value(ctx)
    factor = NumericalResult.exact(1 - Fraction(1, 2 ** (s - 1)), ctx.working_prec)
    return factor * zeta_value(s, ctx)


def _geometric_series(x: mpf, k: int, goal: mpf, max_terms: int) -> NumericalResult:
    """sum x^n / n^k for |x| < 1, stopped when the geometric tail bound drops below goal."""
    ax = abs(x)
    total = mpf(0)
    power = mpf(1)
    n = 0
    while True:
        n += 1
        power *= x
        total += power / mpf(n) ** k
        tail_bound = ax ** (n + 1) / (mpf(n + 1) ** k * (1 - ax))
        if tail_bound < goal:
            return NumericalResult(total, tail_bound + _ulp(total, mp.prec) * n, mp.prec)
        if n >= max_terms:
            raise PrecisionUnreachable(
                f"polylog series at x={x} did not converge in {max_terms} terms",
                NumericalResult(total, tail_bound, mp.prec),
            )


def polylog_half(k: int, ctx: PrecisionContext) -> NumericalResult:
    """Li_k(1/2) by direct summation of its geometrically convergent series."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"polylog_half needs an integer k >= 1, got {k!r}")

    def compute():
        res = _geometric_series(mpf(1) / 2, k, ctx.inner_tolerance / 4, ctx.max_terms)
        # the tail estimate is at most the first omitted term times 2 at x = 1/2
        return res

    return _cached("li_half", (k,), ctx, compute)


def polylog_value(k: int, x, ctx: PrecisionContext) -> NumericalResult:
    """Li_k(x) for real x in [-1, 1] (x = 1 requires k >= 2)."""
    xf = Fraction(x) if not isinstance(x, mpf) else None
    key_x = xf if xf is not None else str(x)
    if xf is not None:
        if xf == 1:
            if k < 2:
                raise DomainError("Li_1 diverges at x = 1")
            return zeta_value(k, ctx)
        if xf == -1:
            return -zetabar_value(k, ctx)
        if xf == 0:
            return NumericalResult(mpf(0), mpf(0), ctx.working_prec)
        if xf == Fraction(1, 2):
            return polylog_half(k, ctx)

    def compute():
        xv = to_mpf(xf) if xf is not None else mpf(x)
        if abs(xv) > 1:
            raise DomainError(f"polylog argument outside [-1, 1]: {x}")
        if k == 1:
            v = -mpmath.log(1 - xv)
            return NumericalResult(v, _ulp(v, mp.prec) * 4, ctx.working_prec)
        return _geometric_series(xv, k, ctx.inner_tolerance / 4, ctx.max_terms)

    return _cached("polylog", (k, key_x), ctx, compute)


def digamma_shifted(a, ctx: PrecisionContext) -> NumericalResult:
    """psi(1 + a) for a > -1, from the asymptotic series after shifting the argument upward."""
    af = Fraction(a)
    if af <= -1:
        raise DomainError(f"digamma_shifted needs a > -1, got {a}")

    def compute():
        goal = ctx.inner_tolerance / 8
        shift = 24 + ctx.working_dps
        x = to_mpf(af) + shift
        # psi(1+x) ~ ln x + 1/(2x) - sum B_2j / (2j x^2j)
        val = mpmath.log(x) + 1 / (2 * x)
        prev = None
        j = 1
        while True:
            term = to_mpf(bernoulli(2 * j)) / (2 * j) / x ** (2 * j)
            if abs(term) < goal or (prev is not None and abs(term) >= abs(prev)):
                err = abs(term)
                break
            val -= term
            prev = term
            j += 1
        head = mpmath.fsum(1 / (to_mpf(af) + k) for k in range(1, shift + 1))
        value = val - head
        return NumericalResult(value, err + _ulp(value, mp.prec) * (shift + 4), ctx.working_prec)

    return _cached("digamma1p", (af,), ctx, compute)
