from __future__ import annotations

from itertools import product

import pytest

from semivariant.bicyclic import (
    A,
    B,
    ONE,
    BicyclicElement,
    from_word,
    is_mididentity_witnessed,
    multiply,
    to_word,
    verify_example1,
    window,
)
from semivariant.oracles import reduce_bicyclic_word


def rewrite(x, y):
    w = reduce_bicyclic_word(to_word(x) + to_word(y))
    return BicyclicElement(w.count("a"), w.count("b"))


def test_defining_relation():
    assert B * A == ONE
    assert multiply(BicyclicElement(0, 1), BicyclicElement(1, 0)) == BicyclicElement(0, 0)


def test_ab_is_not_one():
    assert A * B == BicyclicElement(1, 1) != ONE


def test_general_product():
    assert BicyclicElement(2, 3) * BicyclicElement(1, 2) == BicyclicElement(2, 4)
    assert rewrite(BicyclicElement(2, 3), BicyclicElement(1, 2)) == BicyclicElement(2, 4)


def test_window_agrees_with_rewriting():
    for x, y in product(window(), repeat=2):
        assert x * y == rewrite(x, y)


def test_associative_with_identity():
    w = window()
    assert all((x * y) * z == x * (y * z) for x, y, z in product(w, repeat=3))
    assert all(ONE * x == x == x * ONE for x in w)


def test_rendering():
    assert str(ONE) == "1"
    assert str(BicyclicElement(1, 1)) == "a^1 b^1"
    assert str(BicyclicElement(0, 3)) == "b^3"
    assert from_word("abba") == BicyclicElement(1, 1)
    assert to_word(BicyclicElement(2, 1)) == "aab"


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        BicyclicElement(-1, 0)


def test_mididentity_witnesses():
    assert is_mididentity_witnessed(A * B) == (ONE, ONE)
    assert is_mididentity_witnessed(ONE) is None
    assert is_mididentity_witnessed(B) is not None


def test_example_chain():
    r = verify_example1()
    assert r.passed
    assert r.details["false_identity"] == ["1", "a^1 b^1"]
    chain = r.details["chain"]
    assert "1 = 1 o (a^1 b^1) = (1 o a) o b = a^1 o b = a^1 b^1" in chain
    assert chain[-1] == "contradiction: 1 != a^1 b^1"


def test_aab_reduction_on_window():
    a2b = A * (A * B)
    for m in window():
        assert m * a2b * B == m * A * A * B * B
    assert a2b == BicyclicElement(2, 1)
