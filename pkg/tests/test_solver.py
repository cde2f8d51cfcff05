from __future__ import annotations

import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulersums.grammar import parse_expr
from eulersums.identities import Identity
from eulersums.reference import EXACT_TARGETS, QUADRATIC_CLOSED_FORMS
from eulersums.solver import (
    InconsistentSystemError,
    RelationSystem,
    back_substitute,
    reduce_expression,
    relations_for_weight,
    solve_closed_forms,
)
from eulersums.symbolic import Expression, canonical
from eulersums.table import KnownReductionTable, default_table_text

POOL = ["S(1,2;3)", "S(1,3;2)", "S(2,2;3)", "S(2,3;2)", "S(1,2;4)", "S(1,4;2)"]
UNKNOWNS = [next(iter(parse_expr(t).atoms())) for t in POOL]
BASIS = [parse_expr(t) for t in ("1", "z3", "z5", "z2*z3", "ln2^2")]


def _atom(text: str):
    return next(iter(parse_expr(text).atoms()))


@st.composite
def planted_systems(draw):
    """An invertible integer system L*U in n unknowns with known solution, plus redundant rows."""
    n = draw(st.integers(1, len(UNKNOWNS)))
    ints = st.integers(-4, 4)
    lower = [[1 if i == j else (draw(ints) if j < i else 0) for j in range(n)] for i in range(n)]
    upper = [[draw(st.sampled_from([-3, -2, -1, 1, 2, 3])) if i == j else (draw(ints) if j > i else 0)
              for j in range(n)] for i in range(n)]
    matrix = [[sum(lower[i][k] * upper[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), ints), max_size=3))
    for a, b, c in extra:
        matrix.append([matrix[a][j] + c * matrix[b][j] for j in range(n)])
    values = []
    for _ in range(n):
        v = Expression.zero()
        for b in BASIS:
            v = v + b * Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 6)))
        values.append(canonical(v))
    return UNKNOWNS[:n], values, matrix


def _identities(unknowns, values, matrix):
    out = []
    for i, row in enumerate(matrix):
        lhs = Expression.zero()
        rhs = Expression.zero()
        for c, u, v in zip(row, unknowns, values):
            lhs = lhs + Expression.atom(u) * c
            rhs = rhs + v * c
        out.append(Identity(f"row{i}", lhs, rhs))
    return out


@settings(max_examples=1000)
@given(planted_systems())
def test_planted_systems_recover_solution(system):
    unknowns, values, matrix = system
    rels = _identities(unknowns, values, matrix)
    res = solve_closed_forms(unknowns, rels)
    assert not res.partial and not res.unsolved
    for u, v in zip(unknowns, values):
        assert res.solved[u] == v
    assert all(d.is_zero() for d in back_substitute(res.solved, rels).values())


def test_inconsistent_system_names_relations():
    u = Expression.atom(UNKNOWNS[0])
    rels = [Identity("first", u, parse_expr("z3")), Identity("unrelated", Expression.atom(UNKNOWNS[1]), parse_expr("z5")),
            Identity("second", u * 2, parse_expr("z3"))]
    with pytest.raises(InconsistentSystemError) as info:
        solve_closed_forms([UNKNOWNS[0]], rels)
    assert info.value.relation_ids == ("first", "second")
    assert "first" in str(info.value) and "second" in str(info.value)


def test_rank_deficiency_is_not_an_error():
    a, b = UNKNOWNS[:2]
    rels = [Identity("only", Expression.atom(a) + Expression.atom(b), parse_expr("z3"))]
    res = solve_closed_forms([a, b], rels)
    assert res.solved == {}
    assert res.partial[a] == canonical(parse_expr("z3") - Expression.atom(b))
    assert res.unsolved == [b]
    assert solve_closed_forms([], rels).solved == {}


def test_nonlinear_relation_is_skipped():
    u = Expression.atom(UNKNOWNS[0])
    rels = [Identity("square", u * u, parse_expr("z6")), Identity("plain", u, parse_expr("z3"))]
    system = RelationSystem(rels)
    assert system.skipped == ["square"]
    assert system.solve().solved[UNKNOWNS[0]] == parse_expr("z3")


@pytest.mark.parametrize("w, alternating", [(w, False) for w in range(4, 11)] + [(w, True) for w in range(2, 7)])
def test_generated_relations_are_consistent(w, alternating, table):
    rels = relations_for_weight(w, alternating)
    start = time.perf_counter()
    system = RelationSystem(rels, table)
    res = system.solve()
    assert time.perf_counter() - start < 60
    solution = {**res.solved, **res.partial}
    residues = back_substitute(solution, rels, table)
    assert all(table(d).is_zero() for d in residues.values()), [k for k, d in residues.items() if not d.is_zero()]


@pytest.mark.parametrize("sig", EXACT_TARGETS)
def test_exact_targets_reproduced(sig, table):
    reduced, _ = reduce_expression(parse_expr(sig), table)
    assert reduced == canonical(parse_expr(QUADRATIC_CLOSED_FORMS[sig]))


def _table_without(sig: str) -> KnownReductionTable:
    lines = [ln for ln in default_table_text().splitlines() if not ln.startswith(sig + " ")]
    return KnownReductionTable("\n".join(lines), certify=False)


@pytest.mark.parametrize("sig", [s for s in EXACT_TARGETS if s != "S(1,2;3)"])
def test_exact_targets_come_from_relations(sig):
    reduced, res = reduce_expression(parse_expr(sig), _table_without(sig))
    assert _atom(sig) in res.solved
    assert reduced == canonical(parse_expr(QUADRATIC_CLOSED_FORMS[sig]))


def test_weight_six_needs_one_seed():
    # the generated weight-6 relations fix every quadratic sum up to S(1,2;3)
    reduced, res = reduce_expression(parse_expr("S(1,2;3)"), _table_without("S(1,2;3)"))
    assert _atom("S(1,2;3)") in reduced.atoms()


def test_reduce_leaves_unreachable_sums_alone(table):
    reduced, res = reduce_expression(parse_expr("S(b1,2;3)"), table)
    assert _atom("S(b1,2;3)") in reduced.atoms()
