"""Exact closed forms: rational linear combinations of products of constants.

An :class:`Expression` maps each :class:`Monomial` (a product of :class:`Atom`
powers) to a nonzero ``Fraction``.  Expressions are immutable and always kept
in normal form, so structural equality is meaningful.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .exact import even_zeta_ratio
from .numerics import (
    NumericalResult,
    PrecisionContext,
    ln2_value,
    pi_value,
    polylog_half,
    zeta_value,
    zetabar_value,
)
from .sums import SumSignature, euler_sum_value

__all__ = [
    "Atom",
    "Monomial",
    "Expression",
    "normalize",
    "merge_even_zetas",
    "canonical",
    "expr_add",
    "expr_mul",
    "expr_scale",
    "expr_eval",
    "render",
]

_KIND_ORDER = {"pi": 0, "ln2": 1, "zeta": 2, "zetabar": 3, "lihalf": 4, "sum": 5}


@dataclass(frozen=True)
class Atom:
    kind: str
    k: int = 0
    sig: SumSignature | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.kind == "zeta" and self.k < 2:
            raise ValueError(f"zeta({self.k}) diverges; zeta atoms need k >= 2")
        if self.kind == "zetabar" and self.k < 1:
            raise ValueError("alternating zeta atoms need k >= 1")
        if self.kind == "lihalf" and self.k < 2:
            raise ValueError("Li_k(1/2) atoms need k >= 2")
        if self.kind == "sum" and self.sig is None:
            raise ValueError("sum atoms need a signature")

    @classmethod
    def pi(cls) -> "Atom":
        return cls("pi")

    @classmethod
    def ln2(cls) -> "Atom":
        return cls("ln2")

    @classmethod
    def zeta(cls, k: int) -> "Atom":
        return cls("zeta", k)

    @classmethod
    def zetabar(cls, k: int) -> "Atom":
        return cls("zetabar", k)

    @classmethod
    def li_half(cls, k: int) -> "Atom":
        return cls("lihalf", k)

    @classmethod
    def euler_sum(cls, sig: SumSignature) -> "Atom":
        return cls("sum", 0, sig)

    @property
    def weight(self) -> int:
        if self.kind in ("pi", "ln2"):
            return 1
        if self.kind == "sum":
            return self.sig.weight
        return self.k

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.k, self.sig.sort_key() if self.sig else ())

    def __lt__(self, other: "Atom") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == "pi":
            return "pi"
        if self.kind == "ln2":
            return "ln2"
        if self.kind == "zeta":
            return f"z{self.k}"
        if self.kind == "zetabar":
            return f"zb{self.k}"
        if self.kind == "lihalf":
            return f"Li{self.k}(1/2)"
        return str(self.sig)

    def evaluate(self, ctx: PrecisionContext) -> NumericalResult:
        if self.kind == "pi":
            return pi_value(ctx)
        if self.kind == "ln2":
            return ln2_value(ctx)
        if self.kind == "zeta":
            return zeta_value(self.k, ctx)
        if self.kind == "zetabar":
            return zetabar_value(self.k, ctx)
        if self.kind == "lihalf":
            return polylog_half(self.k, ctx)
        return euler_sum_value(self.sig, ctx)


@dataclass(frozen=True)
class Monomial:
    """Product of atom powers; the empty product is the constant 1."""

    factors: tuple[tuple[Atom, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Atom, int] = {}
        for atom, e in self.factors:
            if e < 0:
                raise ValueError("negative exponents are not supported")
            merged[atom] = merged.get(atom, 0) + e
        canon = tuple(sorted(((a, e) for a, e in merged.items() if e), key=lambda t: t[0].sort_key()))
        object.__setattr__(self, "factors", canon)

    @classmethod
    def of(cls, *atoms: Atom) -> "Monomial":
        return cls(tuple((a, 1) for a in atoms))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def weight(self) -> int:
        return sum(a.weight * e for a, e in self.factors)

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a, _ in self.factors)

    def exponent(self, atom: Atom) -> int:
        for a, e in self.factors:
            if a == atom:
                return e
        return 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.factors + other.factors)

    def sort_key(self) -> tuple:
        return (self.degree, tuple((a.sort_key(), -e) for a, e in self.factors))

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(a) if e == 1 else f"{a}^{e}" for a, e in self.factors)


ONE = Monomial()


class Expression:
    """Immutable rational combination of monomials, kept normalized."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, c in items:
            c = Fraction(c)
            if not c:
                continue
            for m2, c2 in _rewrite_monomial(mono):
                acc[m2] = acc.get(m2, Fraction(0)) + c * c2
        self._terms = tuple(sorted(((m, c) for m, c in acc.items() if c), key=lambda t: t[0].sort_key()))
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c) -> "Expression":
        return cls({ONE: Fraction(c)})

    @classmethod
    def atom(cls, a: Atom) -> "Expression":
        return cls({Monomial.of(a): Fraction(1)})

    @classmethod
    def zeta(cls, k: int) -> "Expression":
        return cls.atom(Atom.zeta(k))

    @classmethod
    def zetabar(cls, k: int) -> "Expression":
        return cls.atom(Atom.zetabar(k))

    @classmethod
    def ln2(cls) -> "Expression":
        return cls.atom(Atom.ln2())

    @classmethod
    def sum_of(cls, sig: SumSignature) -> "Expression":
        if sig.depth == 0:
            k = sig.outer_exponent
            return cls.zetabar(k) if sig.outer_alternating else cls.zeta(k)
        return cls.atom(Atom.euler_sum(sig))

    @classmethod
    def zero(cls) -> "Expression":
        return cls()

    # views
    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return self._terms

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        for m, c in self._terms:
            if m == mono:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == ONE for m, _ in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return self.coefficient(ONE)

    def atoms(self) -> set[Atom]:
        return {a for m, _ in self._terms for a in m.atoms()}

    def sum_atoms(self) -> set[Atom]:
        return {a for a in self.atoms() if a.kind == "sum"}

    def weights(self) -> set[int]:
        return {m.weight for m, _ in self._terms}

    # ring operations
    def __add__(self, other) -> "Expression":
        other = _lift(other)
        return Expression(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> "Expression":
        return Expression([(m, -c) for m, c in self._terms])

    def __sub__(self, other) -> "Expression":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Expression":
        return _lift(other) - self

    def __mul__(self, other) -> "Expression":
        if isinstance(other, (int, Fraction)):
            return Expression([(m, c * other) for m, c in self._terms])
        other = _lift(other)
        out = []
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                out.append((m1 * m2, c1 * c2))
        return Expression(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Expression":
        if isinstance(other, Expression):
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of an expression by zero")
        return self * (1 / other)

    def __pow__(self, k: int) -> "Expression":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Expression.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, mapping: Mapping[Atom, "Expression"]) -> "Expression":
        """Replace atoms by expressions (one pass)."""
        out = []
        for mono, c in self._terms:
            piece = Expression.constant(c)
            for a, e in mono.factors:
                repl = mapping.get(a)
                piece = piece * (repl ** e if repl is not None else Expression({Monomial(((a, e),)): 1}))
            out.extend(piece._terms)
        return Expression(out)

    def map_terms(self, fn: Callable[[Monomial], "Expression"]) -> "Expression":
        out = []
        for mono, c in self._terms:
            out.extend((fn(mono) * c)._terms)
        return Expression(out)

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Expression.constant(other)
        if not isinstance(other, Expression):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Expression<{render(self)}>"

    def evaluate(self, ctx: PrecisionContext) -> NumericalResult:
        return expr_eval(self, ctx)


def _lift(x) -> Expression:
    if isinstance(x, Expression):
        return x
    if isinstance(x, (int, Fraction)):
        return Expression.constant(x)
    if isinstance(x, Atom):
        return Expression.atom(x)
    raise TypeError(f"cannot use {type(x).__name__} in an expression")


def _rewrite_monomial(mono: Monomial) -> list[tuple[Monomial, Fraction]]:
    """Bar elimination on one monomial, returned as (monomial, factor) pairs."""
    coef = Fraction(1)
    out: list[tuple[Atom, int]] = []
    for a, e in mono.factors:
        if a.kind == "zetabar":
            if a.k == 1:
                out.append((Atom.ln2(), e))
            else:
                coef *= (1 - Fraction(1, 2 ** (a.k - 1))) ** e
                out.append((Atom.zeta(a.k), e))
        elif a.kind == "sum" and a.sig.depth == 0:
            k = a.sig.outer_exponent
            if a.sig.outer_alternating:
                if k == 1:
                    out.append((Atom.ln2(), e))
                else:
                    coef *= (1 - Fraction(1, 2 ** (k - 1))) ** e
                    out.append((Atom.zeta(k), e))
            else:
                out.append((Atom.zeta(k), e))
        else:
            out.append((a, e))
    return [(Monomial(tuple(out)), coef)]


def normalize(e: Expression) -> Expression:
    """Canonical form: bars eliminated, like terms combined, zero terms dropped.

    Expressions are built normalized, so this is a re-canonicalization that
    also accepts raw term lists.
    """
    return Expression(e.terms)


def _merge_monomial(mono: Monomial) -> Expression:
    evens = [(a, e) for a, e in mono.factors if a.kind == "zeta" and a.k % 2 == 0]
    if sum(e for _, e in evens) < 2:
        return Expression({mono: 1})
    ratio = Fraction(1)
    total = 0
    for a, e in evens:
        ratio *= even_zeta_ratio(a.k) ** e
        total += a.k * e
    rest = tuple((a, e) for a, e in mono.factors if not (a.kind == "zeta" and a.k % 2 == 0))
    merged = Monomial(rest + ((Atom.zeta(total), 1),))
    return Expression({merged: ratio / even_zeta_ratio(total)})


def merge_even_zetas(e: Expression) -> Expression:
    """Rewrite products of even zeta values as one even zeta value times a rational.

    zeta(2a) zeta(2b) is a rational multiple of zeta(2a+2b) because each even zeta
    value is a rational multiple of the matching power of pi.
    """
    return e.map_terms(_merge_monomial)


def canonical(e: Expression) -> Expression:
    """Normal form used for structural comparison of closed forms."""
    return merge_even_zetas(normalize(e))


def expr_add(a: Expression, b: Expression) -> Expression:
    return a + b


def expr_mul(a: Expression, b: Expression) -> Expression:
    return a * b


def expr_scale(a: Expression, c) -> Expression:
    return a * Fraction(c)


_ATOM_CACHE: dict[tuple[Atom, int], NumericalResult] = {}
_ATOM_LOCK = threading.Lock()


def _atom_value(a: Atom, ctx: PrecisionContext) -> NumericalResult:
    key = (a, ctx.working_dps)
    hit = _ATOM_CACHE.get(key)
    if hit is None:
        hit = a.evaluate(ctx)
        with _ATOM_LOCK:
            _ATOM_CACHE[key] = hit
    return hit


def expr_eval(e: Expression, ctx: PrecisionContext) -> NumericalResult:
    """Numerical value of ``e``; the bound collects atom bounds through each product."""
    total = NumericalResult.exact(0, ctx.working_prec)
    for mono, c in e.terms:
        term = NumericalResult.exact(c, ctx.working_prec)
        for a, k in mono.factors:
            term = term * (_atom_value(a, ctx) ** k)
        total = total + term
    return total


def _render_coefficient(c: Fraction, mono: Monomial, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if mono == ONE:
        body = str(mag)
    elif mag == 1:
        body = str(mono)
    else:
        body = f"{mag}*{mono}"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def render(e: Expression) -> str:
    """Plain-text form accepted back by the expression parser."""
    if e.is_zero():
        return "0"
    return "".join(_render_coefficient(c, m, i == 0) for i, (m, c) in enumerate(e.terms))
