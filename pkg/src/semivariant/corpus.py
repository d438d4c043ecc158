"""Small semigroups up to isomorphism, and the named examples."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

from .congruences import OrderTooLarge
from .core import (
    FiniteSemigroup,
    is_group,
    is_inverse_semigroup,
    is_regular,
    left_right_group_decompose,
)

log = logging.getLogger(__name__)

MAX_ORDER = 5
LARGE_ORDER = 5

# number of semigroups up to isomorphism (not anti-isomorphism)
KNOWN_COUNTS = {1: 1, 2: 5, 3: 24, 4: 188, 5: 1915}


@dataclass(frozen=True)
class CorpusEntry:
    semigroup: FiniteSemigroup
    tags: frozenset[str]
    source: str
    label: str = ""


def compute_tags(S: FiniteSemigroup) -> frozenset[str]:
    tags = set()
    if is_regular(S):
        tags.add("regular")
    if is_inverse_semigroup(S):
        tags.add("inverse")
    if is_group(S):
        tags.add("group")
    dec = left_right_group_decompose(S)
    if dec is not None:
        tags.add("left-group" if dec.side == "left" else "right-group")
        if dec.side == "left" and dec.zero_part.order == 1:
            tags.add("right-group")
    if S.identity is not None:
        tags.add("has-identity")
    return frozenset(tags)


def canonical_form(table) -> tuple[int, ...]:
    """Lexicographically least flattened table over all relabelings."""
    n = len(table)
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, j in enumerate(p):
            inv[j] = i
        flat = tuple(p[table[inv[x]][inv[y]]] for x in range(n) for y in range(n))
        if best is None or flat < best:
            best = flat
    return best


def _search(n: int, first_row: tuple[int, ...] | None) -> set[tuple[int, ...]]:
    """Canonical forms of all associative tables, optionally with row 0 fixed."""
    T = [[-1] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]
    found: set[tuple[int, ...]] = set()

    def triple_ok(a: int, b: int, c: int) -> bool:
        ab = T[a][b]
        bc = T[b][c]
        if ab < 0 or bc < 0:
            return True
        lhs, rhs = T[ab][c], T[a][bc]
        return lhs < 0 or rhs < 0 or lhs == rhs

    def consistent(x: int, y: int) -> bool:
        # every triple whose evaluation touches cell (x, y)
        for z in range(n):
            if not (triple_ok(x, y, z) and triple_ok(z, x, y)):
                return False
        for s in range(n):
            for t in range(n):
                if T[s][t] == x and not triple_ok(s, t, y):
                    return False
                if T[s][t] == y and not triple_ok(x, s, t):
                    return False
        return True

    def rec(k: int) -> None:
        if k == len(cells):
            found.add(canonical_form(T))
            return
        x, y = cells[k]
        for v in range(n):
            T[x][y] = v
            if consistent(x, y):
                rec(k + 1)
        T[x][y] = -1

    if first_row is None:
        rec(0)
        return found
    for y, v in enumerate(first_row):
        T[0][y] = v
        if not consistent(0, y):
            return found
    rec(n)
    return found


def _search_star(args):
    return _search(*args)


def enumerate_semigroups(order: int, allow_large: bool = False,
                         workers: int | None = None) -> list[FiniteSemigroup]:
    """All semigroups of the given order up to isomorphism, sorted by canonical
    table.  The search is split by the first row of the table."""
    if order < 1 or order > MAX_ORDER:
        raise OrderTooLarge(f"enumeration supports orders 1..{MAX_ORDER}")
    if order >= LARGE_ORDER and not allow_large:
        raise OrderTooLarge(f"order {order} needs allow_large=True")
    if order >= LARGE_ORDER:
        log.warning("enumerating order %d semigroups; this takes a long time", order)
    workers = workers or 1
    rows = list(product(range(order), repeat=order))
    found: set[tuple[int, ...]] = set()
    if workers == 1:
        for row in rows:
            found |= _search(order, row)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_search_star, [(order, r) for r in rows]):
                found |= part
    n = order
    return [FiniteSemigroup(tuple(f[i * n:(i + 1) * n] for i in range(n))) for f in sorted(found)]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SEMIVARIANT_WORKERS", "1")))
    except ValueError:
        return 1


def semilattice() -> FiniteSemigroup:
    """``E = {a, b}`` with ``a <= b``; product is the meet."""
    return FiniteSemigroup(((0, 0), (0, 1)), ("a", "b"))


REES_WORDS = ("a", "b", "aa", "ab", "ba", "bb")


def rees_quotient() -> FiniteSemigroup:
    """``{a,b}^+`` modulo the ideal of words of length at least 3, elements
    ordered ``a, b, aa, ab, ba, bb, 0``."""
    index = {w: i for i, w in enumerate(REES_WORDS)}
    zero = len(REES_WORDS)
    names = REES_WORDS + ("0",)
    rows = []
    for x in names:
        row = []
        for y in names:
            w = x + y
            row.append(zero if "0" in w or len(w) >= 3 else index[w])
        rows.append(tuple(row))
    return FiniteSemigroup(tuple(rows), names)


def named_examples() -> list[CorpusEntry]:
    return [
        CorpusEntry(semilattice(), compute_tags(semilattice()), "named-example", "semilattice"),
        CorpusEntry(rees_quotient(), compute_tags(rees_quotient()), "named-example", "rees-quotient"),
    ]


def corpus(max_order: int = 4, workers: int | None = None) -> list[CorpusEntry]:
    out = []
    for n in range(1, max_order + 1):
        for i, S in enumerate(enumerate_semigroups(n, allow_large=True, workers=workers)):
            out.append(CorpusEntry(S, compute_tags(S), "enumerated", f"order{n}#{i}"))
    return out
