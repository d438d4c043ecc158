from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from semivariant.bicyclic import BicyclicElement, from_word, to_word
from semivariant.congruences import (
    all_congruences,
    congruence_closure,
    join,
    meet,
    rho_bc,
)
from semivariant.corpus import enumerate_semigroups
from semivariant.oracles import reduce_bicyclic_word
from semivariant.variants import variant

SMALL = enumerate_semigroups(1) + enumerate_semigroups(2) + enumerate_semigroups(3) \
    + enumerate_semigroups(4)

semigroups = st.sampled_from(SMALL)
bicyclic = st.builds(BicyclicElement, st.integers(0, 40), st.integers(0, 40))


@st.composite
def semigroup_with_pairs(draw):
    S = draw(semigroups)
    el = st.integers(0, S.order - 1)
    return S, draw(st.lists(st.tuples(el, el), max_size=4))


@st.composite
def congruence_pair(draw):
    S = draw(st.sampled_from([S for S in SMALL if S.order <= 3]))
    cs = all_congruences(S)
    rho, sigma = draw(st.sampled_from(cs)), draw(st.sampled_from(cs))
    one = st.integers(0, S.monoid.order - 1)
    return rho, sigma, draw(one), draw(one)


@given(bicyclic, bicyclic, bicyclic)
def test_bicyclic_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(st.text(alphabet="ab", max_size=30), st.text(alphabet="ab", max_size=30))
def test_bicyclic_words(u, v):
    assert from_word(u) * from_word(v) == from_word(u + v)
    assert to_word(from_word(u)) == reduce_bicyclic_word(u)


@given(semigroups, st.data())
def test_variant_associative(S, data):
    a = data.draw(st.integers(0, S.order - 1))
    V = variant(S, a).semigroup
    t = V.table
    assert all(t[t[x][y]][z] == t[x][t[y][z]] for x in V.elements for y in V.elements for z in V.elements)


@settings(max_examples=60)
@given(semigroup_with_pairs())
def test_closure_is_least(args):
    S, pairs = args
    c = congruence_closure(S, pairs)
    assert all(c.related(s, t) for s, t in pairs)
    if S.order <= 3:
        containing = [k for k in all_congruences(S) if all(k.related(s, t) for s, t in pairs)]
        assert all(c.issubset(k) for k in containing)


@settings(max_examples=80)
@given(congruence_pair())
def test_lattice_laws_and_sandwich(args):
    rho, sigma, b, c = args
    m, j = meet(rho, sigma), join(rho, sigma)
    assert m.issubset(rho) and m.issubset(sigma)
    assert rho.issubset(j) and sigma.issubset(j)
    assert meet(rho, j).same_relation(rho)
    assert join(rho, m).same_relation(rho)
    # rho -> rho_{b,c} is monotone and preserves meets
    assert rho_bc(m, b, c).same_relation(meet(rho_bc(rho, b, c), rho_bc(sigma, b, c)))
    assert rho.issubset(rho_bc(rho, b, c))
