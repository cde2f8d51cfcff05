from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from eulersums.sums import SumSignature
from eulersums.symbolic import Atom, Expression, Monomial

coefficients = st.builds(
    Fraction, st.integers(-60, 60).filter(bool), st.integers(1, 40)
)


@st.composite
def signatures(draw, max_depth: int = 2, max_exponent: int = 6) -> SumSignature:
    depth = draw(st.integers(0, max_depth))
    inner = tuple(
        (draw(st.integers(1, max_exponent)), draw(st.booleans())) for _ in range(depth)
    )
    alt = draw(st.booleans())
    q = draw(st.integers(1 if alt else 2, max_exponent))
    return SumSignature(inner, q, alt)


simple_atoms = st.one_of(
    st.builds(Atom.zeta, st.integers(2, 9)),
    st.builds(Atom.zetabar, st.integers(1, 6)),
    st.just(Atom.ln2()),
    st.just(Atom.pi()),
    st.builds(Atom.li_half, st.integers(2, 6)),
)

atoms = st.one_of(simple_atoms, st.builds(Atom.euler_sum, signatures()))


@st.composite
def monomials(draw, atom_strategy=atoms) -> Monomial:
    n = draw(st.integers(0, 3))
    return Monomial(tuple((draw(atom_strategy), draw(st.integers(1, 3))) for _ in range(n)))


@st.composite
def expressions(draw, atom_strategy=atoms, max_terms: int = 5) -> Expression:
    n = draw(st.integers(0, max_terms))
    return Expression([(draw(monomials(atom_strategy)), draw(coefficients)) for _ in range(n)])
