"""Variants ``S_a`` (sandwich product ``s * t = s a t``) and factorizations of
the sandwich element."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSemigroup, SemigroupError, Table


@dataclass(frozen=True)
class Variant:
    base: FiniteSemigroup
    sandwich: int
    semigroup: FiniteSemigroup

    @property
    def table(self) -> Table:
        return self.semigroup.table


@dataclass(frozen=True)
class Decomposition:
    """A factorization ``a = beta * alpha`` over ``S^1``."""

    alpha: int
    beta: int
    product_a: int


def variant_table(S: FiniteSemigroup, a: int) -> Table:
    M = S.monoid
    tab = M.table
    n = S.order
    return tuple(tuple(tab[tab[s][a]][t] for t in range(n)) for s in range(n))


def variant(S: FiniteSemigroup, a: int) -> Variant:
    """Build ``S_a`` for ``a`` in ``S^1``.  Taking ``a = 1`` gives ``S`` back."""
    if not 0 <= a < S.monoid.order:
        raise SemigroupError(f"sandwich {a} is not an element of S^1")
    if a == S.monoid.one:
        return Variant(S, a, S)
    return Variant(S, a, FiniteSemigroup(variant_table(S, a), S.names))


def decompositions(S: FiniteSemigroup, a: int) -> list[Decomposition]:
    """All ``(beta, alpha)`` in ``S^1 x S^1`` with ``beta alpha = a``, sorted by
    ``(beta, alpha)``."""
    M = S.monoid
    return [Decomposition(alpha, beta, a)
            for beta in range(M.order)
            for alpha in range(M.order)
            if M.mul(beta, alpha) == a]
