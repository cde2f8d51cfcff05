"""Exact linear elimination of quadratic Euler sums from identity systems.

Each identity, after replacing every atom with a certified reduction from the
known table, becomes ``sum_u c_u * u = rhs`` where the unknowns ``u`` are
depth-2 sum atoms and ``rhs`` involves only the remaining basis atoms.  The
system is row-reduced over ``Fraction`` with expression-valued right sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .identities import (
    PM_FAMILIES,
    Identity,
    cyclic_triple,
    euler_linear_sum,
)
from .numerics import DomainError
from .symbolic import Atom, Expression, canonical

__all__ = [
    "InconsistentSystemError",
    "RelationSystem",
    "SolveResult",
    "solve_closed_forms",
    "relations_for_weight",
    "reduce_expression",
    "back_substitute",
]


class InconsistentSystemError(ValueError):
    """A combination of relations reduced to ``0 = nonzero``."""

    def __init__(self, relation_ids: Sequence[str], residue: Expression):
        self.relation_ids = tuple(relation_ids)
        self.residue = residue
        super().__init__(
            "inconsistent relations " + ", ".join(self.relation_ids) + f": they imply 0 = {residue}"
        )


def is_quadratic_sum(a: Atom) -> bool:
    return a.kind == "sum" and a.sig.depth == 2


Substituter = Callable[[Expression], Expression]


def _identity_substituter(e: Expression) -> Expression:
    return canonical(e)


@dataclass
class _Row:
    coeffs: dict[Atom, Fraction]
    rhs: Expression
    sources: frozenset[str]


@dataclass
class SolveResult:
    """``solved`` maps to expressions free of unknowns; ``partial`` still contains some."""

    solved: dict[Atom, Expression] = field(default_factory=dict)
    partial: dict[Atom, Expression] = field(default_factory=dict)
    unsolved: list[Atom] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def value(self, a: Atom) -> Expression | None:
        return self.solved.get(a, self.partial.get(a))


class RelationSystem:
    """Unknowns in lexicographic order and one row per usable relation."""

    def __init__(self, relations: Iterable[Identity], substitute: Substituter = _identity_substituter,
                 is_unknown: Callable[[Atom], bool] = is_quadratic_sum):
        self.rows: list[_Row] = []
        self.skipped: list[str] = []
        self.substitute = substitute
        unknowns: set[Atom] = set()
        for rel in relations:
            if not rel.is_symbolic:
                self.skipped.append(rel.id)
                continue
            row = self._row(rel, is_unknown)
            if row is None:
                self.skipped.append(rel.id)
                continue
            unknowns |= row.coeffs.keys()
            self.rows.append(row)
        self.unknowns: list[Atom] = sorted(unknowns)

    def _row(self, rel: Identity, is_unknown: Callable[[Atom], bool]) -> _Row | None:
        diff = self.substitute(rel.difference())
        coeffs: dict[Atom, Fraction] = {}
        rest = []
        for mono, c in diff.terms:
            hits = [a for a in mono.atoms() if is_unknown(a)]
            if not hits:
                rest.append((mono, -c))
                continue
            if len(mono.factors) != 1 or mono.factors[0][1] != 1:
                return None  # unknown inside a product; not linear
            coeffs[hits[0]] = c
        return _Row(coeffs, Expression(rest), frozenset([rel.id]))

    def eliminate(self) -> tuple[list[tuple[Atom, _Row]], list[_Row]]:
        """Reduced row echelon form; returns (pivot column, row) pairs and leftover rows."""
        rows = [_Row(dict(r.coeffs), r.rhs, r.sources) for r in self.rows]
        pivots: list[tuple[Atom, _Row]] = []
        for col in self.unknowns:
            pick = next((r for r in rows if r.coeffs.get(col)), None)
            if pick is None:
                continue
            rows.remove(pick)
            lead = pick.coeffs[col]
            if lead != 1:
                pick.coeffs = {a: c / lead for a, c in pick.coeffs.items()}
                pick.rhs = pick.rhs / lead
            for other in rows + [r for _, r in pivots]:
                f = other.coeffs.get(col)
                if not f:
                    continue
                for a, c in pick.coeffs.items():
                    v = other.coeffs.get(a, Fraction(0)) - f * c
                    if v:
                        other.coeffs[a] = v
                    else:
                        other.coeffs.pop(a, None)
                other.rhs = other.rhs - pick.rhs * f
                other.sources = other.sources | pick.sources
            pivots.append((col, pick))
        return pivots, rows

    def solve(self, targets: Sequence[Atom] | None = None) -> SolveResult:
        pivots, leftovers = self.eliminate()
        for r in leftovers:
            if not r.coeffs and not canonical(r.rhs).is_zero():
                raise InconsistentSystemError(sorted(r.sources), canonical(r.rhs))
        out = SolveResult(skipped=list(self.skipped))
        by_col = dict(pivots)
        wanted = list(targets) if targets is not None else list(self.unknowns)
        for t in wanted:
            row = by_col.get(t)
            if row is None:
                out.unsolved.append(t)
                continue
            expr = row.rhs
            free = False
            for a, c in row.coeffs.items():
                if a == t:
                    continue
                free = True
                expr = expr - Expression.atom(a) * c
            (out.partial if free else out.solved)[t] = canonical(expr)
        return out


def solve_closed_forms(
    targets: Sequence[Atom],
    relations: Iterable[Identity],
    substitute: Substituter = _identity_substituter,
) -> SolveResult:
    """Closed forms for ``targets``; rank deficiency leaves targets unsolved, never an error."""
    if not targets:
        return SolveResult()
    return RelationSystem(relations, substitute).solve(targets)


def back_substitute(solution: Mapping[Atom, Expression], relations: Iterable[Identity],
                    substitute: Substituter = _identity_substituter) -> dict[str, Expression]:
    """Each relation's lhs - rhs after plugging in ``solution``; all values are zero when consistent."""
    out = {}
    for rel in relations:
        if not rel.is_symbolic:
            continue
        diff = substitute(rel.difference())
        out[rel.id] = canonical(diff.substitute(dict(solution)))
    return out


# --------------------------------------------------------------- relation sets

# lhs weight of each (p, m) family
_FAMILY_WEIGHT: dict[str, Callable[[int, int], int]] = {
    "odd_gap_harmonic_sum": lambda p, m: 2 * p + 2 * m + 2,
    "odd_gap_alternating_harmonic_sum": lambda p, m: 2 * p + 2 * m + 2,
    "even_gap_harmonic_difference": lambda p, m: 2 * p + 2 * m + 1,
    "even_gap_alternating_harmonic_difference": lambda p, m: 2 * p + 2 * m + 1,
    "mixed_sign_triple": lambda p, m: 2 * p + 2 * m + 2,
    "all_alternating_triple": lambda p, m: 2 * p + 2 * m + 2,
    "odd_gap_square_sum": lambda p, m: 2 * p + 2 * m + 3,
    "even_gap_square_difference": lambda p, m: 2 * p + 2 * m + 2,
    "square_cyclic_triple": lambda p, m: 2 * p + 2 * m + 3,
    "alternating_outer_quadratic": lambda p, m: 2 * p + 2 * m + 2,
    "cube_odd_gap": lambda p, m: 2 * p + 2 * m + 4,
    "cube_even_gap": lambda p, m: 2 * p + 2 * m + 3,
}

_ALTERNATING_FAMILIES = {
    "odd_gap_alternating_harmonic_sum",
    "even_gap_alternating_harmonic_difference",
    "mixed_sign_triple",
    "all_alternating_triple",
    "alternating_outer_quadratic",
}


def relations_for_weight(w: int, alternating: bool = False) -> list[Identity]:
    """Every generated symbolic relation whose sums have weight ``w``, in a fixed order."""
    out: list[Identity] = []
    for name, (fn, pmin) in PM_FAMILIES.items():
        if name in _ALTERNATING_FAMILIES and not alternating:
            continue
        weight = _FAMILY_WEIGHT[name]
        for p in range(pmin, w + 1):
            for m in range(0, w // 2 + 1):
                if weight(p, m) == w:
                    out.append(fn(p, m))
    signs = ((1, 1, 1),) if not alternating else tuple(
        (x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)
    )
    for l1 in range(1, w):
        for l2 in range(l1, w):
            m = w - l1 - l2
            if m < 1:
                continue
            for x, y, z in signs:
                try:
                    out.append(cyclic_triple(l1, l2, m, x, y, z))
                except DomainError:
                    pass
    if w >= 3:
        out.append(euler_linear_sum(w - 1))
    return out


def reduce_expression(e: Expression, substitute: Substituter = _identity_substituter) -> tuple[Expression, SolveResult]:
    """Rewrite ``e`` with every solvable quadratic sum replaced by its closed form.

    Relations are generated at each weight that occurs among the quadratic sums of ``e``.
    """
    e = substitute(e)
    quads = sorted(a for a in e.atoms() if is_quadratic_sum(a))
    merged = SolveResult()
    for w in sorted({a.weight for a in quads}):
        here = [a for a in quads if a.weight == w]
        alternating = any(a.sig.is_alternating for a in here)
        res = solve_closed_forms(here, relations_for_weight(w, alternating), substitute)
        merged.solved.update(res.solved)
        merged.partial.update(res.partial)
        merged.unsolved.extend(res.unsolved)
        merged.skipped.extend(res.skipped)
    mapping = {a: v for a, v in merged.solved.items()}
    return canonical(substitute(e.substitute(mapping))), merged
