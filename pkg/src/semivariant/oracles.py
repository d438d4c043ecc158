"""Deliberately naive reference computations.

Nothing here shares code with the routines it is used to cross-check.
"""

from __future__ import annotations

from itertools import permutations, product


def naive_semigroup_tables(order: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every associative table of the given order up to isomorphism, by brute
    force over all ``n^(n^2)`` tables.  Only sensible for ``order <= 3``."""
    n = order
    perms = list(permutations(range(n)))
    seen = set()
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(t[t[x][y]][z] == t[x][t[y][z]]
               for x in range(n) for y in range(n) for z in range(n)):
            best = None
            for p in perms:
                inv = [0] * n
                for i, j in enumerate(p):
                    inv[j] = i
                relabeled = tuple(p[t[inv[x]][inv[y]]] for x in range(n) for y in range(n))
                if best is None or relabeled < best:
                    best = relabeled
            seen.add(best)
    return [tuple(f[i * n:(i + 1) * n] for i in range(n)) for f in sorted(seen)]


def transitive_closure_of_union(x: tuple[int, ...], y: tuple[int, ...]) -> list[list[bool]]:
    """Boolean relation matrix of ``(x u y)^t`` for two partitions given by
    class labels, by Warshall's algorithm."""
    n = len(x)
    rel = [[x[i] == x[j] or y[i] == y[j] for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return rel


def relation_matrix(labels: tuple[int, ...]) -> list[list[bool]]:
    return [[a == b for b in labels] for a in labels]


def reduce_bicyclic_word(word: str) -> str:
    """Delete occurrences of ``ba`` until none remain."""
    while "ba" in word:
        word = word.replace("ba", "", 1)
    return word


def two_sided_cancellation_holds(table, alpha: int, beta: int, n: int) -> bool:
    """``alpha s beta = alpha t beta`` implies ``s = t`` over ``s, t < n``."""
    values = [table[table[alpha][s]][beta] for s in range(n)]
    return all(values[s] != values[t] for s in range(n) for t in range(n) if s != t)
