from __future__ import annotations

from itertools import product

import pytest

from semivariant.actions import (
    Action,
    ActionError,
    DecompositionMismatch,
    PreconditionFailed,
    action_axiom_witness,
    all_actions,
    cayley_action,
    check_cyclic_proposition,
    check_faithfulness_theorem,
    compatibility_witness,
    generating_points,
    group_action_from_variant,
    induced,
    is_cyclic,
    is_faithful,
    kernel_congruence,
    mididentity_inverse_pairs,
    quotient_cayley_action,
    reconstruct_action,
    representation_exists_brute_force,
    validate_action,
)
from semivariant.congruences import all_congruences
from semivariant.core import direct_product, is_regular, left_right_group_decompose
from semivariant.corpus import enumerate_semigroups
from semivariant.variants import decompositions, variant

from conftest import cyclic_group, left_zero, right_zero


def on_self(S):
    """Right regular action of ``S`` on ``S`` itself (no adjoined point)."""
    return Action(S, S.order, S.table)


def test_cayley_action_valid(rees):
    A = cayley_action(rees)
    assert A.points == rees.monoid.order and validate_action(A)


def test_trivial_one_point_action(LZ):
    assert validate_action(Action(LZ, 1, ((0, 0),)))


def test_exhaustive_two_point_filter(LZ):
    tables = list(product(product(range(2), repeat=2), repeat=2))
    assert len(tables) == 16
    valid = [t for t in tables if validate_action(Action(LZ, 2, t))]
    assert 0 < len(valid) < 16
    bad = next(t for t in tables if t not in valid)
    m, s, u = action_axiom_witness(Action(LZ, 2, bad))
    assert bad[bad[m][s]][u] != bad[m][LZ.mul(s, u)]
    assert sorted(A.act for A in all_actions(LZ, 2)) == sorted(valid)


def test_induced_special_decompositions():
    for S in enumerate_semigroups(3):
        A = cayley_action(S)
        one = S.monoid.one
        for a in S.elements:
            right = induced(A, a, one, a)
            left = induced(A, a, a, one)
            for m, s in product(range(A.points), S.elements):
                assert right.act[m][s] == A.apply(m, S.mul(s, a))
                assert left.act[m][s] == A.apply(m, S.mul(a, s))


def test_induced_semilattice_bottom_constant(E):
    A = on_self(E)
    I = induced(A, 0, 0, 1)
    assert I.act == ((0, 0), (0, 0))


def test_induced_rejects_wrong_decomposition(E):
    with pytest.raises(DecompositionMismatch):
        induced(cayley_action(E), 0, 1, 1)


def test_every_induced_action_is_valid():
    for S in enumerate_semigroups(3):
        for A in all_actions(S, 2):
            for a in S.elements:
                for d in decompositions(S, a):
                    assert validate_action(induced(A, a, d.alpha, d.beta))


def test_faithfulness_examples(LZ, E):
    assert not is_faithful(on_self(LZ))
    assert is_faithful(cayley_action(LZ))
    assert is_faithful(on_self(E))


def test_kernel_congruence_examples(LZ, E):
    assert kernel_congruence(cayley_action(E)).is_identity()
    assert kernel_congruence(Action(E, 1, ((0, 0),))).is_universal()
    assert kernel_congruence(on_self(LZ)).is_universal()


def test_generating_points(E):
    G = cyclic_group(3)
    assert generating_points(on_self(G)) == frozenset(G.elements)
    assert generating_points(on_self(E)) == frozenset({1})
    assert is_cyclic(Action(E, 1, ((0, 0),)))


def test_cyclic_proposition_semilattice(E):
    A = on_self(E)
    I = induced(A, 0, 0, 1)
    assert not is_cyclic(I)
    assert check_cyclic_proposition(A, 0, 0, 1).passed


def test_faithfulness_theorem_corpus():
    for n in (1, 2, 3):
        for S in enumerate_semigroups(n):
            actions = [cayley_action(S)] + all_actions(S, 2)
            for A, a in product(actions, S.elements):
                for d in decompositions(S, a):
                    r = check_faithfulness_theorem(A, a, d.alpha, d.beta)
                    assert r.passed, r.witness


def test_unfaithful_base_never_induces_faithful():
    # a non-faithful base action never induces a faithful one
    for S in enumerate_semigroups(3):
        for A in all_actions(S, 2):
            if is_faithful(A):
                continue
            for a in S.elements:
                for d in decompositions(S, a):
                    assert not is_faithful(induced(A, a, d.alpha, d.beta))


def test_quotient_cayley_action(rees):
    for rho in all_congruences(left_zero(2)):
        A = quotient_cayley_action(rho)
        assert validate_action(A)
        assert kernel_congruence(A).same_relation(rho)


# -- reconstruction ---------------------------------------------------------------------------

def test_reconstruct_group_trivial_decomposition():
    G = cyclic_group(3)
    star = on_self(G)
    out = reconstruct_action(G, star, 0, 0)
    assert out.act == star.act


def test_reconstruct_compatibility_on_regular_corpus():
    seen = 0
    for n in (1, 2, 3):
        for S in enumerate_semigroups(n):
            if not is_regular(S):
                continue
            for a in S.elements:
                V = variant(S, a).semigroup
                stars = [Action(V, V.order, V.table)] + all_actions(V, 2)
                for d in decompositions(S, a):
                    if not mididentity_inverse_pairs(S, d.alpha, d.beta):
                        continue
                    for star in stars:
                        try:
                            A = reconstruct_action(S, star, d.alpha, d.beta)
                        except PreconditionFailed as exc:
                            assert exc.hypothesis == "not-cancellable"
                            continue
                        assert validate_action(A)
                        assert compatibility_witness(A, star, d.alpha, d.beta) is None
                        seen += 1
    assert seen > 0


def test_reconstruct_preconditions(E, LZ):
    V = variant(E, 0).semigroup
    star = Action(V, 1, ((0, 0),))
    with pytest.raises(PreconditionFailed) as info:
        reconstruct_action(E, star, 0, 1)
    assert info.value.hypothesis in {"not-a-mididentity", "not-cancellable"}
    with pytest.raises(PreconditionFailed) as info:
        reconstruct_action(LZ, Action(LZ, 1, ((0, 0),)), LZ.monoid.one, LZ.monoid.one)
    assert info.value.hypothesis == "sandwich-not-in-S"
    wrong = Action(E, 1, ((0, 0),))
    with pytest.raises(PreconditionFailed) as info:
        reconstruct_action(E, wrong, 0, 1)
    assert info.value.hypothesis == "star-not-on-variant"


@pytest.mark.parametrize("side", ["left", "right"])
def test_group_construction(side):
    U = left_zero(2) if side == "left" else right_zero(2)
    S = direct_product(cyclic_group(2), U)
    dec = left_right_group_decompose(S)
    back = dec.inverse_map()
    for a in S.elements:
        V = variant(S, a).semigroup
        for star in [Action(V, V.order, V.table)] + all_actions(V, 2):
            A, got = group_action_from_variant(S, a, star)
            assert got == side and validate_action(A)
            g, _ = dec.iso[a]
            for m, s in product(range(star.points), S.elements):
                t = S.mul(s, a) if side == "left" else S.mul(a, s)
                assert A.act[m][t] == star.act[m][s]
            # explicit formula m.(h,v) = m*(h g^-1, v) for left groups
            if side == "left":
                ginv = next(x for x in range(2) if (g + x) % 2 == 0)
                for m, (h, v) in product(range(star.points), product(range(2), range(2))):
                    assert A.act[m][back[(h, v)]] == star.act[m][back[((h + ginv) % 2, v)]]


def test_group_construction_needs_group(E):
    V = variant(E, 0).semigroup
    with pytest.raises(PreconditionFailed):
        group_action_from_variant(E, 0, Action(V, 1, ((0, 0),)))


def test_brute_force_agrees_with_reconstruction():
    G = cyclic_group(2)
    for a in G.elements:
        V = variant(G, a).semigroup
        for star in all_actions(V, 2):
            for d in decompositions(G, a):
                assert representation_exists_brute_force(G, star, d.alpha, d.beta) is True


def test_action_shape_checked(E):
    with pytest.raises(ActionError):
        Action(E, 2, ((0, 0),))
    with pytest.raises(ActionError):
        Action(E, 1, ((0, 3),))
