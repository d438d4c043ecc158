from __future__ import annotations

import pytest

from semivariant.actions import cayley_action, induced
from semivariant.congruences import all_congruences
from semivariant.core import AssociativityViolation
from semivariant.corpus import enumerate_semigroups
from semivariant.formats import (
    FormatError,
    format_action,
    format_congruence,
    format_semigroup,
    format_semigroups,
    parse_action,
    parse_congruence,
    parse_semigroup,
    parse_semigroups,
)


def test_semigroup_golden(E):
    assert format_semigroup(E) == "semigroup 2\n0 0\n0 1\nnames: a b\n"


def test_roundtrip_everything(rees):
    items = enumerate_semigroups(3) + [rees]
    assert [S.table for S in parse_semigroups(format_semigroups(items))] == [S.table for S in items]
    for S in items:
        assert parse_semigroup(format_semigroup(S)) == S
        A = cayley_action(S)
        assert parse_action(format_action(A), S).act == A.act
        for rho in all_congruences(S):
            assert parse_congruence(format_congruence(rho), S) == rho


def test_induced_action_roundtrip(rees):
    b = rees.names.index("b")
    I = induced(cayley_action(rees), b, b, rees.monoid.one)
    text = format_action(I)
    assert text.startswith(f"action {rees.order + 1} {rees.order}\n")
    assert parse_action(text, rees).act == I.act


@pytest.mark.parametrize("text", [
    "",
    "semigroup x\n0\n",
    "semigroup 2\n0 0\n",
    "semigroup 2\n0 0\n0  1\n",
    "semigroup 2\n0 0\n0 1\nnames: a\n",
    "semigroup 2\n0 0\n0 1\nextra\n",
    "group 1\n0\n",
])
def test_bad_semigroup_text(text):
    with pytest.raises(FormatError):
        parse_semigroup(text)


def test_non_associative_text():
    with pytest.raises(AssociativityViolation):
        parse_semigroup("semigroup 2\n1 0\n0 0\n")


def test_bad_action_and_congruence(E):
    with pytest.raises(FormatError):
        parse_action("action 1 3\n0 0 0\n", E)
    with pytest.raises(FormatError):
        parse_congruence("congruence 2\n0\n", E)
