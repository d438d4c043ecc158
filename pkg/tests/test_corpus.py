from __future__ import annotations

import pytest

from semivariant.congruences import OrderTooLarge, find_isomorphism
from semivariant.core import find_associativity_violation
from semivariant.corpus import (
    KNOWN_COUNTS,
    canonical_form,
    compute_tags,
    corpus,
    enumerate_semigroups,
    named_examples,
)
from semivariant.oracles import naive_semigroup_tables

from conftest import idx


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts(n):
    assert len(enumerate_semigroups(n)) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_naive_filter(n):
    naive = naive_semigroup_tables(n)
    ours = enumerate_semigroups(n)
    assert len(naive) == len(ours)
    assert sorted(canonical_form(t) for t in naive) == sorted(canonical_form(S.table) for S in ours)


def test_order_two_by_hand():
    # 16 tables, filter associative, dedupe under the two relabelings
    assert len(naive_semigroup_tables(2)) == 5


def test_pairwise_non_isomorphic_order3():
    items = enumerate_semigroups(3)
    for i, S in enumerate(items):
        assert find_associativity_violation(S.table) is None
        for T in items[i + 1:]:
            assert find_isomorphism(S, T) is None


def test_order4_canonical_forms_distinct():
    forms = [canonical_form(S.table) for S in enumerate_semigroups(4)]
    assert len(set(forms)) == len(forms) == 188


def test_worker_count_does_not_change_output():
    one = enumerate_semigroups(4, workers=1)
    many = enumerate_semigroups(4, workers=2)
    assert [S.table for S in one] == [S.table for S in many]


def test_order5_needs_flag():
    with pytest.raises(OrderTooLarge):
        enumerate_semigroups(5)
    with pytest.raises(OrderTooLarge):
        enumerate_semigroups(6, allow_large=True)


def test_named_examples(E, rees):
    names = [e.label for e in named_examples()]
    assert names == ["semilattice", "rees-quotient"]
    assert E.mul(0, 1) == 0
    assert rees.order == 7
    a, b, ab, zero = idx(rees, "a", "b", "ab", "0")
    assert rees.mul(a, b) == ab
    assert rees.mul(ab, a) == zero
    assert all(rees.mul(zero, x) == zero for x in rees.elements)


def test_tags(E, Z2):
    assert {"regular", "inverse", "has-identity"} <= compute_tags(E)
    assert "group" in compute_tags(Z2)


def test_corpus_labels():
    labels = [e.label for e in corpus(2)]
    assert labels == ["order1#0"] + [f"order2#{i}" for i in range(5)]
