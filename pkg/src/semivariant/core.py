"""Finite semigroups stored as Cayley tables, plus the element predicates
used throughout the package.

Elements are positional indices.  ``S.monoid`` is the monoid ``S^1``: it is
``S`` itself when ``S`` already has a two-sided identity, otherwise a fresh
identity is adjoined at index ``S.order``.  Functions that accept elements of
``S^1`` use exactly that indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence, Union

Table = tuple[tuple[int, ...], ...]


class SemigroupError(ValueError):
    """Base class for malformed algebraic input."""


class AssociativityViolation(SemigroupError):
    def __init__(self, s: int, t: int, u: int):
        self.triple = (s, t, u)
        super().__init__(f"associativity fails at (s, t, u) = ({s}, {t}, {u})")


class NotClosed(SemigroupError):
    def __init__(self, s: int, t: int, product_: int):
        self.pair = (s, t)
        super().__init__(f"subset not closed: {s}*{t} = {product_} is not a member")


def find_associativity_violation(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for s in range(n):
        row_s = table[s]
        for t in range(n):
            st = row_s[t]
            row_st = table[st]
            row_t = table[t]
            for u in range(n):
                if row_st[u] != row_s[row_t[u]]:
                    return (s, t, u)
    return None


def _find_identity(table: Table) -> int | None:
    n = len(table)
    for e in range(n):
        if table[e] == tuple(range(n)) and all(table[x][e] == x for x in range(n)):
            return e
    return None


@dataclass(frozen=True)
class FiniteSemigroup:
    """An associative Cayley table; ``table[s][t]`` is the product ``st``.

    The table is validated on construction.  ``identity`` is detected, never
    supplied.
    """

    table: Table
    names: tuple[str, ...] | None = None
    identity: int | None = field(default=None, init=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(table)
        if n == 0:
            raise SemigroupError("a semigroup needs at least one element")
        for s, row in enumerate(table):
            if len(row) != n:
                raise SemigroupError(f"row {s} has {len(row)} entries, expected {n}")
            for t, x in enumerate(row):
                if not 0 <= x < n:
                    raise SemigroupError(f"entry ({s}, {t}) = {x} is outside [0, {n})")
        bad = find_associativity_violation(table)
        if bad is not None:
            raise AssociativityViolation(*bad)
        names = self.names
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise SemigroupError(f"expected {n} names, got {len(names)}")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "identity", _find_identity(table))

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def product(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.table[acc][x]
        return acc

    def name(self, s: int) -> str:
        if self.names is not None and 0 <= s < len(self.names):
            return self.names[s]
        if s == len(self.table):
            return "1"
        return str(s)

    @cached_property
    def monoid(self) -> MonoidView:
        return adjoin_identity(self)

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return frozenset(e for e in self.elements if self.table[e][e] == e)

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order}, table={[list(r) for r in self.table]})"


def new_semigroup(order: int, table: Sequence[Sequence[int]],
                  names: Sequence[str] | None = None) -> FiniteSemigroup:
    if len(table) != order:
        raise SemigroupError(f"table has {len(table)} rows, expected {order}")
    return FiniteSemigroup(tuple(tuple(r) for r in table),
                           None if names is None else tuple(names))


@dataclass(frozen=True)
class MonoidView:
    """``S^1``: ``semigroup`` is the monoid, ``base`` the original ``S``."""

    base: FiniteSemigroup
    adjoined: bool
    semigroup: FiniteSemigroup

    @property
    def order(self) -> int:
        return self.semigroup.order

    @property
    def one(self) -> int:
        return self.semigroup.identity

    @property
    def table(self) -> Table:
        return self.semigroup.table

    def mul(self, x: int, y: int) -> int:
        return self.semigroup.table[x][y]

    def product(self, *xs: int) -> int:
        return self.semigroup.product(*xs)

    def in_base(self, x: int) -> bool:
        return x < self.base.order


AnySemigroup = Union[FiniteSemigroup, MonoidView]


def adjoin_identity(S: AnySemigroup) -> MonoidView:
    if isinstance(S, MonoidView):
        S = S.semigroup
    if S.identity is not None:
        return MonoidView(S, False, S)
    n = S.order
    rows = [row + (s,) for s, row in enumerate(S.table)]
    rows.append(tuple(range(n + 1)))
    names = None if S.names is None else S.names + ("1",)
    return MonoidView(S, True, FiniteSemigroup(tuple(rows), names))


def _monoid(S: AnySemigroup) -> MonoidView:
    return S if isinstance(S, MonoidView) else S.monoid


def _base(S: AnySemigroup) -> FiniteSemigroup:
    return S.base if isinstance(S, MonoidView) else S


# -- cancellability and mididentities ---------------------------------------

def is_left_cancellable(S: AnySemigroup, u: int) -> bool:
    """``us = ut`` implies ``s = t`` for ``s, t`` in the base semigroup; ``u`` in ``S^1``."""
    M = _monoid(S)
    n = M.base.order
    row = M.table[u]
    return len({row[s] for s in range(n)}) == n


def is_right_cancellable(S: AnySemigroup, u: int) -> bool:
    M = _monoid(S)
    n = M.base.order
    tab = M.table
    return len({tab[s][u] for s in range(n)}) == n


def is_mididentity(S: AnySemigroup, u: int) -> bool:
    """``sut = st`` for all ``s, t`` in the base semigroup (``u`` may be in ``S^1``)."""
    M = _monoid(S)
    tab = M.table
    n = M.base.order
    for s in range(n):
        su = tab[s][u]
        row_s = tab[s]
        row_su = tab[su]
        for t in range(n):
            if row_su[t] != row_s[t]:
                return False
    return True


# -- regularity ---------------------------------------------------------------

def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    return S.idempotents


def inverses_of(S: FiniteSemigroup, x: int) -> frozenset[int]:
    tab = S.table
    return frozenset(y for y in S.elements
                     if tab[tab[x][y]][x] == x and tab[tab[y][x]][y] == y)


def is_regular_element(S: FiniteSemigroup, x: int) -> bool:
    tab = S.table
    return any(tab[tab[x][y]][x] == x for y in S.elements)


def is_regular(S: FiniteSemigroup) -> bool:
    return all(is_regular_element(S, x) for x in S.elements)


def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    if not is_regular(S):
        return False
    tab = S.table
    E = sorted(S.idempotents)
    return all(tab[e][f] == tab[f][e] for e in E for f in E)


def inverse_in_inverse_semigroup(S: FiniteSemigroup, x: int) -> int:
    (y,) = inverses_of(S, x)
    return y


# -- Green's relations -----------------------------------------------------------

def principal_left_ideal(S: AnySemigroup, x: int) -> frozenset[int]:
    """``M x`` where ``M`` is the monoid view; this is ``S^1 x``."""
    M = _monoid(S)
    return frozenset(M.mul(y, x) for y in range(M.order))


def principal_right_ideal(S: AnySemigroup, x: int) -> frozenset[int]:
    M = _monoid(S)
    return frozenset(M.mul(x, y) for y in range(M.order))


def green_L_related(S: AnySemigroup, x: int, y: int) -> bool:
    return principal_left_ideal(S, x) == principal_left_ideal(S, y)


def green_R_related(S: AnySemigroup, x: int, y: int) -> bool:
    return principal_right_ideal(S, x) == principal_right_ideal(S, y)


# -- one-sided identities, simplicity, left/right groups ------------------------

def is_left_identity(S: FiniteSemigroup, e: int) -> bool:
    return S.table[e] == tuple(S.elements)


def is_right_identity(S: FiniteSemigroup, e: int) -> bool:
    return all(S.table[s][e] == s for s in S.elements)


def is_left_simple(S: FiniteSemigroup) -> bool:
    """Every ``Ss`` is all of ``S``."""
    n = S.order
    return all(len({S.table[t][s] for t in S.elements}) == n for s in S.elements)


def is_right_simple(S: FiniteSemigroup) -> bool:
    n = S.order
    return all(len(set(S.table[s])) == n for s in S.elements)


def is_group(S: FiniteSemigroup) -> bool:
    e = S.identity
    if e is None:
        return False
    return all(e in S.table[s] for s in S.elements)


def is_left_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[s][t] == s for s in S.elements for t in S.elements)


def is_right_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[s][t] == t for s in S.elements for t in S.elements)


@dataclass(frozen=True)
class GroupDecomposition:
    """An isomorphism ``S -> G x U`` with ``G`` a group and ``U`` a one-sided zero
    semigroup; ``iso[s] = (g, u)``."""

    group: FiniteSemigroup
    zero_part: FiniteSemigroup
    side: str
    iso: tuple[tuple[int, int], ...]

    def inverse_map(self) -> dict[tuple[int, int], int]:
        return {gu: s for s, gu in enumerate(self.iso)}


def direct_product(G: FiniteSemigroup, U: FiniteSemigroup) -> FiniteSemigroup:
    """Direct product with element ``(g, u)`` at index ``g * |U| + u``."""
    m = U.order
    pairs = list(product(G.elements, U.elements))
    rows = tuple(tuple(G.table[g][h] * m + U.table[u][v] for h, v in pairs)
                 for g, u in pairs)
    return FiniteSemigroup(rows)


def verify_decomposition(S: FiniteSemigroup, dec: GroupDecomposition) -> bool:
    G, U = dec.group, dec.zero_part
    if not is_group(G):
        return False
    if dec.side == "left" and not is_left_zero(U):
        return False
    if dec.side == "right" and not is_right_zero(U):
        return False
    if len(set(dec.iso)) != S.order or S.order != G.order * U.order:
        return False
    for s in S.elements:
        gs, us = dec.iso[s]
        for t in S.elements:
            gt, ut = dec.iso[t]
            if dec.iso[S.table[s][t]] != (G.table[gs][gt], U.table[us][ut]):
                return False
    return True


def _decompose_one_side(S: FiniteSemigroup, side: str) -> GroupDecomposition | None:
    # a left group G x U (U left zero) is left simple: S(g, u) = S
    simple = is_left_simple(S) if side == "left" else is_right_simple(S)
    E = sorted(S.idempotents)
    if not simple or not E:
        return None
    tab = S.table
    e = E[0]
    # the maximal subgroup containing e, and the idempotent "coordinate" of s
    if side == "left":
        G_members = sorted({tab[e][s] for s in S.elements})
        project = lambda s: tab[e][s]
        coord = lambda s: next(f for f in E if tab[f][s] == s)
    else:
        G_members = sorted({tab[s][e] for s in S.elements})
        project = lambda s: tab[s][e]
        coord = lambda s: next(f for f in E if tab[s][f] == s)
    G = subset_semigroup(S, G_members).semigroup
    U = subset_semigroup(S, E).semigroup
    g_index = {x: i for i, x in enumerate(G_members)}
    u_index = {x: i for i, x in enumerate(E)}
    iso = tuple((g_index[project(s)], u_index[coord(s)]) for s in S.elements)
    dec = GroupDecomposition(G, U, side, iso)
    if not verify_decomposition(S, dec):
        raise RuntimeError(f"{side} group decomposition failed verification")
    return dec


def left_right_group_decompose(S: FiniteSemigroup) -> GroupDecomposition | None:
    """Split a left (right) group as ``G x U`` with ``U`` left (right) zero.

    Detection uses "left [right] simple with an idempotent"; the returned
    map is re-verified by a full scan.  Groups are reported as left groups.
    """
    return _decompose_one_side(S, "left") or _decompose_one_side(S, "right")


# -- subsemigroups --------------------------------------------------------------

@dataclass(frozen=True)
class SubsetSemigroup:
    parent: FiniteSemigroup
    members: tuple[int, ...]
    semigroup: FiniteSemigroup

    @property
    def table(self) -> Table:
        return self.semigroup.table

    @cached_property
    def index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.members)}


def subset_semigroup(S: FiniteSemigroup, members: Iterable[int]) -> SubsetSemigroup:
    members = tuple(sorted(set(members)))
    idx = {x: i for i, x in enumerate(members)}
    rows = []
    for s in members:
        row = []
        for t in members:
            st = S.table[s][t]
            if st not in idx:
                raise NotClosed(s, t, st)
            row.append(idx[st])
        rows.append(tuple(row))
    names = None if S.names is None else tuple(S.names[x] for x in members)
    return SubsetSemigroup(S, members, FiniteSemigroup(tuple(rows), names))


def sandwich_set(S: FiniteSemigroup, b: int, c: int) -> tuple[int, ...]:
    M = S.monoid
    return tuple(sorted({M.product(b, s, c) for s in S.elements}))


def sandwich_subset(S: FiniteSemigroup, b: int, c: int) -> SubsetSemigroup:
    """The subsemigroup ``bSc`` for ``b, c`` in ``S^1``."""
    return subset_semigroup(S, sandwich_set(S, b, c))
