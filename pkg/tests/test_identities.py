from __future__ import annotations

import pickle
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpf

from eulersums.identities import (
    GENERATORS,
    PM_FAMILIES,
    S,
    cube_odd_gap,
    cyclic_triple,
    euler_linear_sum,
    generator_cells,
    grid_identities,
    hurwitz_zeta_weighted_harmonic,
    reflection,
    z,
    zeta_weighted_harmonic,
)
from eulersums.numerics import DomainError, PrecisionContext
from eulersums.solver import _FAMILY_WEIGHT
from eulersums.symbolic import expr_eval

TOL = mpf(10) ** -25


def _passes(ident, ctx) -> bool:
    r = ident.residual(ctx)
    return abs(r.value) + r.bound <= TOL


@settings(max_examples=1000)
@given(st.sampled_from(sorted(PM_FAMILIES)), st.integers(0, 9), st.integers(-1, 5))
def test_every_family_conserves_weight(name, p, m):
    fn, pmin = PM_FAMILIES[name]
    if p < pmin or m < 0:
        with pytest.raises(DomainError):
            fn(p, m)
        return
    ident = fn(p, m)
    # degenerate cells collapse to 0 == 0
    ws = ident.weights()
    assert ws == {_FAMILY_WEIGHT[name](p, m)} or (ident.lhs.is_zero() and ident.rhs.is_zero())


@settings(max_examples=1000)
@given(
    st.integers(1, 6), st.integers(1, 6), st.integers(1, 6),
    st.sampled_from([1, -1]), st.sampled_from([1, -1]), st.sampled_from([1, -1]),
)
def test_cyclic_triple_conserves_weight(l1, l2, m, x, y, w):
    try:
        ident = cyclic_triple(l1, l2, m, x, y, w)
    except DomainError:
        # only Li_1(1) diverges
        assert 1 in [k for k, s in ((l1, x), (l2, y), (m, w)) if s == 1]
        return
    assert ident.weights() <= {l1 + l2 + m}


@settings(max_examples=1000)
@given(st.integers(2, 12), st.integers(2, 12))
def test_linear_generators_conserve_weight(p, q):
    assert euler_linear_sum(p).weights() == {p + 1}
    assert reflection(p, q).weights() <= {p + q}
    assert zeta_weighted_harmonic(p, q).weights() <= {p + q + 1}


def test_fixed_relations_conserve_weight():
    for name in ("weight_six_alternating", "printed_closed_forms", "printed_combinations"):
        for ident in generator_cells(name):
            assert len(ident.weights()) == 1, ident.id


def test_euler_linear_sum_k2():
    ident = euler_linear_sum(2)
    assert ident.lhs == S(1, 2)
    assert ident.rhs == z(3) * 2


def test_reflection_holds(ctx30):
    assert _passes(reflection(3, 5), ctx30)


def test_identity_pickles():
    ident = hurwitz_zeta_weighted_harmonic(2, 3, Fraction(1, 2))
    back = pickle.loads(pickle.dumps(ident))
    assert back == ident
    ctx = PrecisionContext(target_digits=20)
    r = back.residual(ctx)
    assert abs(r.value) + r.bound <= mpf(10) ** -15


def test_zeta_weighted_harmonic_equal_arguments_is_trivial(ctx30):
    r = zeta_weighted_harmonic(2, 2).residual(ctx30)
    assert r.value == 0
    assert zeta_weighted_harmonic(2, 2).rhs.is_zero()


@pytest.mark.parametrize("p, m", [(2, 0), (3, 1), (4, 0), (5, 2)])
def test_cube_family_corrected_coefficient(p, m, ctx30):
    ident = cube_odd_gap(p, m)
    assert _passes(ident, ctx30)
    # with the coefficient q(q-1)/2 the identity misses by q S(1,p;q+2)
    q = p + 2 * m + 1
    sign = -1 if p % 2 else 1
    variant = ident.rhs + S(1, p, q + 2) * (q * sign)
    r = expr_eval(ident.lhs - variant, ctx30)
    assert abs(r.value) > mpf(10) ** -3


@pytest.mark.parametrize("name", sorted(PM_FAMILIES))
def test_families_hold_at_smallest_point(name, ctx30):
    fn, pmin = PM_FAMILIES[name]
    assert _passes(fn(max(pmin, 2), 0), ctx30)


def test_grid_filters_and_order():
    names = ["reflection", "euler_linear_sum"]
    ids = [i.id for i in grid_identities(range(2, 4), range(0, 2), names)]
    assert ids == [
        "reflection(p=2,q=2)", "reflection(p=2,q=3)", "reflection(p=3,q=3)", "reflection(p=3,q=4)",
        "euler_linear_sum(k=2)", "euler_linear_sum(k=3)",
    ]
    assert list(grid_identities(range(0), range(0), ["reflection"])) == []
    with pytest.raises(KeyError):
        list(generator_cells("nonexistent"))


def test_registry_describes_every_generator():
    assert set(PM_FAMILIES) <= set(GENERATORS)
    assert all(GENERATORS.values())


def test_domain_errors():
    with pytest.raises(DomainError):
        euler_linear_sum(1)
    with pytest.raises(DomainError):
        cyclic_triple(1, 2, 3, 2, 1, 1)
    with pytest.raises(DomainError):
        hurwitz_zeta_weighted_harmonic(2, 2, -1)
