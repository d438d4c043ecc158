"""Congruences as canonical partitions, the sandwich congruences
``rho_{b,c}`` / ``rho_a``, quotients, isomorphism search and the claim checks
about them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import (
    FiniteSemigroup,
    MonoidView,
    SemigroupError,
    SubsetSemigroup,
    green_L_related,
    green_R_related,
    inverse_in_inverse_semigroup,
    is_inverse_semigroup,
    is_left_cancellable,
    is_regular_element,
    is_right_cancellable,
    sandwich_subset,
)
from .reports import CheckReport, report, skipped
from .variants import variant

MAX_ALL_CONGRUENCES_ORDER = 9


class NotACongruence(SemigroupError):
    def __init__(self, s: int, t: int, u: int, side: str):
        self.witness = (s, t, u, side)
        super().__init__(f"{s} ~ {t} but translating by {u} on the {side} breaks the relation")


class MixedSemigroups(SemigroupError):
    pass


class OrderTooLarge(SemigroupError):
    pass


def canonical_labels(labels: Iterable) -> tuple[int, ...]:
    """Renumber classes 0, 1, ... in order of their least member."""
    remap: dict = {}
    return tuple(remap.setdefault(x, len(remap)) for x in labels)


def compatibility_witness(S: FiniteSemigroup, class_of: Sequence[int]) -> tuple[int, int, int, str] | None:
    tab = S.table
    first: dict[int, int] = {}
    for t in S.elements:
        s = first.setdefault(class_of[t], t)
        if s == t:
            continue
        for u in S.elements:
            if class_of[tab[u][s]] != class_of[tab[u][t]]:
                return (s, t, u, "left")
            if class_of[tab[s][u]] != class_of[tab[t][u]]:
                return (s, t, u, "right")
    return None


@dataclass(frozen=True)
class Congruence:
    semigroup: FiniteSemigroup
    class_of: tuple[int, ...]

    def __post_init__(self):
        labels = canonical_labels(self.class_of)
        if len(labels) != self.semigroup.order:
            raise SemigroupError(f"expected {self.semigroup.order} class labels, got {len(labels)}")
        bad = compatibility_witness(self.semigroup, labels)
        if bad is not None:
            raise NotACongruence(*bad)
        object.__setattr__(self, "class_of", labels)

    @property
    def order(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    def related(self, s: int, t: int) -> bool:
        return self.class_of[s] == self.class_of[t]

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for s, k in enumerate(self.class_of):
            out[k].append(s)
        return tuple(tuple(c) for c in out)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for cls in self.classes:
            for s in cls:
                for t in cls:
                    yield (s, t)

    def is_identity(self) -> bool:
        return self.num_classes == self.order

    def is_universal(self) -> bool:
        return self.num_classes == 1

    def issubset(self, other: Congruence) -> bool:
        """Containment as relations on the common carrier ``{0..n-1}``.

        The underlying multiplications may differ, as in ``rho`` on ``S``
        against ``rho_{b,c}`` on ``S_{cb}``.
        """
        _same_carrier(self, other)
        image: dict[int, int] = {}
        for k, j in zip(self.class_of, other.class_of):
            if image.setdefault(k, j) != j:
                return False
        return True

    def same_relation(self, other: Congruence) -> bool:
        return self.class_of == other.class_of

    @cached_property
    def quotient(self) -> QuotientSemigroup:
        return quotient(self.semigroup, self)

    def describe(self) -> str:
        S = self.semigroup
        return " | ".join("{" + ",".join(S.name(s) for s in cls) + "}" for cls in self.classes)


def _same_carrier(rho: Congruence, sigma: Congruence) -> None:
    if rho.order != sigma.order:
        raise MixedSemigroups(f"carriers of size {rho.order} and {sigma.order}")


def _same_semigroup(rho: Congruence, sigma: Congruence) -> None:
    if rho.semigroup.table != sigma.semigroup.table:
        raise MixedSemigroups("congruences live on different semigroups")


def identity_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, tuple(S.elements))


def universal_congruence(S: FiniteSemigroup) -> Congruence:
    return Congruence(S, (0,) * S.order)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def congruence_closure(S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``.

    Each pair that actually merges two classes pushes its one-sided
    translations ``(us, ut)`` and ``(su, tu)`` back on the worklist.
    """
    tab = S.table
    uf = _UnionFind(S.order)
    work = list(pairs)
    while work:
        s, t = work.pop()
        if not uf.union(s, t):
            continue
        for u in S.elements:
            work.append((tab[u][s], tab[u][t]))
            work.append((tab[s][u], tab[t][u]))
    return Congruence(S, tuple(uf.find(s) for s in S.elements))


def meet(rho: Congruence, sigma: Congruence) -> Congruence:
    _same_semigroup(rho, sigma)
    return Congruence(rho.semigroup, tuple(zip(rho.class_of, sigma.class_of)))


def _chain_pairs(c: Congruence) -> Iterator[tuple[int, int]]:
    for cls in c.classes:
        for s, t in zip(cls, cls[1:]):
            yield (s, t)


def join(rho: Congruence, sigma: Congruence) -> Congruence:
    _same_semigroup(rho, sigma)
    return congruence_closure(rho.semigroup, [*_chain_pairs(rho), *_chain_pairs(sigma)])


def partition_join_labels(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Equivalence join of two partitions (no translation closure)."""
    uf = _UnionFind(len(x))
    for labels in (x, y):
        first: dict[int, int] = {}
        for s, k in enumerate(labels):
            uf.union(first.setdefault(k, s), s)
    return canonical_labels(uf.find(s) for s in range(len(x)))


# -- sandwich congruences --------------------------------------------------------

def rho_bc_labels(rho: Congruence, b: int, c: int) -> tuple[int, ...]:
    M = rho.semigroup.monoid
    tab = M.table
    cls = rho.class_of
    return canonical_labels(cls[tab[tab[b][s]][c]] for s in rho.semigroup.elements)


def rho_bc(rho: Congruence, b: int, c: int) -> Congruence:
    """``(s, t)`` related iff ``(bsc, btc)`` is in ``rho``; a congruence on ``S_{cb}``."""
    S = rho.semigroup
    V = variant(S, S.monoid.mul(c, b))
    return Congruence(V.semigroup, rho_bc_labels(rho, b, c))


def rho_a_labels(rho: Congruence, a: int) -> tuple[int, ...]:
    tab = rho.semigroup.monoid.table
    cls = rho.class_of
    return canonical_labels(cls[tab[tab[a][s]][a]] for s in rho.semigroup.elements)


def rho_a(rho: Congruence, a: int) -> Congruence:
    """``(s, t)`` related iff ``(asa, ata)`` is in ``rho``; a congruence on ``S_a``."""
    V = variant(rho.semigroup, a)
    return Congruence(V.semigroup, rho_a_labels(rho, a))


def rho_l(rho: Congruence, a: int) -> Congruence:
    return rho_bc(rho, a, rho.semigroup.monoid.one)


def rho_r(rho: Congruence, a: int) -> Congruence:
    return rho_bc(rho, rho.semigroup.monoid.one, a)


# -- quotients and restriction -----------------------------------------------------

@dataclass(frozen=True)
class QuotientSemigroup:
    quotient: FiniteSemigroup
    projection: tuple[int, ...]
    congruence: Congruence

    @cached_property
    def monoid(self) -> MonoidView:
        return self.quotient.monoid

    def image1(self, x: int) -> int:
        """Image in ``(S/rho)^1`` of ``x`` in ``S^1``; the identity of ``S^1``
        goes to the identity of ``(S/rho)^1``."""
        S = self.congruence.semigroup
        if x < S.order:
            return self.projection[x]
        return self.monoid.one


def quotient(S: FiniteSemigroup, rho: Congruence) -> QuotientSemigroup:
    cls = rho.class_of
    k = rho.num_classes
    rows = [[-1] * k for _ in range(k)]
    for s in S.elements:
        for t in S.elements:
            v = cls[S.table[s][t]]
            cur = rows[cls[s]][cls[t]]
            if cur == -1:
                rows[cls[s]][cls[t]] = v
            elif cur != v:
                raise NotACongruence(s, t, -1, "quotient")
    names = None
    if S.names is not None:
        names = tuple("[" + ",".join(S.names[x] for x in c) + "]" for c in rho.classes)
    return QuotientSemigroup(FiniteSemigroup(tuple(map(tuple, rows)), names), cls, rho)


def restrict(rho: Congruence, sub: SubsetSemigroup) -> Congruence:
    """``rho`` intersected with ``sub x sub``, re-indexed onto ``sub.semigroup``."""
    return Congruence(sub.semigroup, tuple(rho.class_of[m] for m in sub.members))


# -- enumeration --------------------------------------------------------------------

def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n``."""
    labels = [0] * n

    def rec(i: int, m: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for k in range(m + 1):
            labels[i] = k
            yield from rec(i + 1, max(m, k + 1))

    if n == 0:
        return
    yield from rec(1, 1)


def all_congruence_labels(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    if S.order > MAX_ALL_CONGRUENCES_ORDER:
        raise OrderTooLarge(f"all_congruences is limited to order <= {MAX_ALL_CONGRUENCES_ORDER}")
    found = [p for p in set_partitions(S.order) if compatibility_witness(S, p) is None]
    found.sort(key=lambda p: (max(p) + 1, p))
    return found


def all_congruences(S: FiniteSemigroup) -> list[Congruence]:
    return [Congruence(S, p) for p in all_congruence_labels(S)]


# -- isomorphism --------------------------------------------------------------------

def _element_invariants(S: FiniteSemigroup) -> list[tuple]:
    tab = S.table
    out = []
    for x in S.elements:
        seen: list[int] = []
        y = x
        while y not in seen:
            seen.append(y)
            y = tab[y][x]
        index = seen.index(y)
        out.append((
            tab[x][x] == x,
            len(set(tab[x])),
            len({tab[s][x] for s in S.elements}),
            sum(row.count(x) for row in tab),
            index,
            len(seen) - index,
        ))
    return out


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup) -> tuple[int, ...] | None:
    """Backtracking search for ``phi`` with ``phi(st) = phi(s)phi(t)``."""
    n = S.order
    if T.order != n:
        return None
    inv_s, inv_t = _element_invariants(S), _element_invariants(T)
    if sorted(inv_s) != sorted(inv_t):
        return None
    order = sorted(S.elements, key=lambda x: (inv_s[x], x))
    candidates = {x: [y for y in T.elements if inv_t[y] == inv_s[x]] for x in S.elements}
    phi = [-1] * n
    used = [False] * n
    ts, tt = S.table, T.table

    def consistent(x: int) -> bool:
        for y in S.elements:
            if phi[y] < 0:
                continue
            for p, q in ((x, y), (y, x)):
                pq = ts[p][q]
                target = tt[phi[p]][phi[q]]
                if phi[pq] >= 0:
                    if phi[pq] != target:
                        return False
                elif used[target]:
                    return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        for y in candidates[x]:
            if used[y]:
                continue
            phi[x] = y
            used[y] = True
            if consistent(x) and rec(i + 1):
                return True
            phi[x] = -1
            used[y] = False
        return False

    return tuple(phi) if rec(0) else None


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi: Sequence[int]) -> bool:
    if S.order != T.order or sorted(phi) != list(T.elements):
        return False
    return all(phi[S.table[s][t]] == T.table[phi[s]][phi[t]]
               for s in S.elements for t in S.elements)


# -- quotient propositions ------------------------------------------------------------

def _explicit_map_witness(V: FiniteSemigroup, kernel: Congruence, target: QuotientSemigroup,
                          sub: SubsetSemigroup, image_of) -> dict | None:
    """Check ``x -> (image_of(x)) rho`` is an onto homomorphism ``V -> target``
    whose kernel is ``kernel``."""
    phi = [target.projection[sub.index[image_of(x)]] for x in V.elements]
    Q = target.quotient
    for x in V.elements:
        for y in V.elements:
            if phi[V.table[x][y]] != Q.table[phi[x]][phi[y]]:
                return {"failure": "not a homomorphism", "x": x, "y": y}
    missing = set(Q.elements) - set(phi)
    if missing:
        return {"failure": "not onto", "class": min(missing)}
    if canonical_labels(phi) != kernel.class_of:
        return {"failure": "kernel mismatch", "kernel": list(canonical_labels(phi)),
                "expected": list(kernel.class_of)}
    return None


def check_quotient_isomorphism_bc(rho: Congruence, b: int, c: int) -> CheckReport:
    """``S_{cb} / rho_{b,c}`` against ``bSc / (rho restricted to bSc)`` via ``x -> (bxc) rho``."""
    S = rho.semigroup
    M = S.monoid
    K = rho_bc(rho, b, c)
    sub = sandwich_subset(S, b, c)
    target = quotient(sub.semigroup, restrict(rho, sub))
    witness = _explicit_map_witness(K.semigroup, K, target, sub, lambda x: M.product(b, x, c))
    if witness is None:
        lhs = K.quotient.quotient
        if find_isomorphism(lhs, target.quotient) is None:
            witness = {"failure": "independent isomorphism search found none"}
    return report("prop-fact", f"{_sname(S)} b={S.name(b)} c={S.name(c)}", witness,
                  size=K.num_classes)


def check_quotient_isomorphism_a(rho: Congruence, a: int) -> CheckReport:
    S = rho.semigroup
    M = S.monoid
    K = rho_a(rho, a)
    sub = sandwich_subset(S, a, a)
    target = quotient(sub.semigroup, restrict(rho, sub))
    witness = _explicit_map_witness(K.semigroup, K, target, sub, lambda x: M.product(a, x, a))
    iso = find_isomorphism(K.quotient.quotient, target.quotient) is not None
    if witness is None and not iso:
        witness = {"failure": "independent isomorphism search found none"}
    elif witness is not None:
        # x -> axa respects the sandwich product only when a.a acts like a
        witness["isomorphic_anyway"] = iso
        witness["a_idempotent"] = M.mul(a, a) == a
    return report("prop-quotient-a", f"{_sname(S)} a={S.name(a)}", witness, size=K.num_classes)


def _sname(S: FiniteSemigroup) -> str:
    return "S=" + ";".join("".join(str(x) for x in row) for row in S.table)


# -- sandwich congruence theorems ----------------------------------------------------

def simple_item1_witness(rho: Congruence, b: int, c: int, b1: int, c1: int) -> dict | None:
    """Item 1: ``b rho L b1 rho`` and ``c rho R c1 rho`` in ``(S/rho)^1`` force
    ``rho_{b,c} = rho_{b1,c1}``."""
    Q = rho.quotient
    QM = Q.monoid
    if not (green_L_related(QM, Q.image1(b), Q.image1(b1))
            and green_R_related(QM, Q.image1(c), Q.image1(c1))):
        return None
    if rho_bc_labels(rho, b, c) != rho_bc_labels(rho, b1, c1):
        return {"item": 1, "b": b, "c": c, "b1": b1, "c1": c1}
    return None


def simple_item2_witness(rho: Congruence, b: int, c: int) -> dict | None:
    K = rho_bc_labels(rho, b, c)
    for s, t in rho.pairs():
        if K[s] != K[t]:
            return {"item": 2, "b": b, "c": c, "s": s, "t": t}
    return None


def simple_item3_witness(rho: Congruence, b: int, c: int) -> dict | None:
    Q = rho.quotient
    QM = Q.monoid
    lhs = rho_bc_labels(rho, b, c) == rho.class_of
    rhs = (is_left_cancellable(QM, Q.image1(b)) and is_right_cancellable(QM, Q.image1(c)))
    if lhs != rhs:
        return {"item": 3, "b": b, "c": c, "equal": lhs, "cancellable": rhs}
    return None


def simple_item4_witness(rho: Congruence, sigma: Congruence, b: int, c: int) -> dict | None:
    contained = rho.issubset(sigma)
    bc_contained = _labels_subset(rho_bc_labels(rho, b, c), rho_bc_labels(sigma, b, c))
    if contained and not bc_contained:
        return {"item": 4, "part": "monotone", "b": b, "c": c}
    Q = sigma.quotient
    QM = Q.monoid
    if is_left_cancellable(QM, Q.image1(b)) and is_right_cancellable(QM, Q.image1(c)):
        if contained != bc_contained:
            return {"item": 4, "part": "reflects", "b": b, "c": c}
    return None


def check_simple_theorem(rho: Congruence, sigma: Congruence, b: int, c: int,
                         b1: int, c1: int) -> CheckReport:
    S = rho.semigroup
    items = {
        "1": simple_item1_witness(rho, b, c, b1, c1),
        "2": simple_item2_witness(rho, b, c),
        "3": simple_item3_witness(rho, b, c),
        "4": simple_item4_witness(rho, sigma, b, c),
    }
    bad = {k: v for k, v in items.items() if v is not None}
    return report("thm-simple", f"{_sname(S)} b={b} c={c} b1={b1} c1={c1}",
                  bad or None, items={k: v is None for k, v in items.items()})


def _labels_subset(x: Sequence[int], y: Sequence[int]) -> bool:
    image: dict[int, int] = {}
    return all(image.setdefault(k, j) == j for k, j in zip(x, y))


def _join_on(V: FiniteSemigroup, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return join(Congruence(V, tuple(x)), Congruence(V, tuple(y))).class_of


def regular_in_monoid(S: FiniteSemigroup, x: int) -> bool:
    return is_regular_element(S.monoid.semigroup, x)


def check_beautiful_theorem(rho: Congruence, sigma: Congruence, b: int, c: int,
                            congruences: Sequence[Congruence] | None = None) -> CheckReport:
    """Meet preservation, the join inclusion, join preservation for regular
    ``b, c`` and injectivity when ``bSc = S``."""
    S = rho.semigroup
    M = S.monoid
    V = variant(S, M.mul(c, b)).semigroup
    rb, sb = rho_bc_labels(rho, b, c), rho_bc_labels(sigma, b, c)
    items: dict[str, object] = {}
    witness: dict[str, object] = {}

    m = meet(rho, sigma)
    items["1"] = rho_bc_labels(m, b, c) == canonical_labels(zip(rb, sb))
    if not items["1"]:
        witness["1"] = {"meet": list(m.class_of)}

    joined_bc = rho_bc_labels(join(rho, sigma), b, c)
    j_of_bc = _join_on(V, rb, sb)
    items["2"] = _labels_subset(j_of_bc, joined_bc)
    strict = items["2"] and j_of_bc != joined_bc
    if not items["2"]:
        witness["2"] = {"join_of_images": list(j_of_bc), "image_of_join": list(joined_bc)}

    if regular_in_monoid(S, b) and regular_in_monoid(S, c):
        items["3"] = j_of_bc == joined_bc
        if not items["3"]:
            witness["3"] = {"join_of_images": list(j_of_bc), "image_of_join": list(joined_bc)}
    else:
        items["3"] = "n/a"

    if len(sandwich_subset(S, b, c).members) == S.order:
        ok = j_of_bc == joined_bc
        if congruences is None:
            congruences = all_congruences(S)
        images = [rho_bc_labels(x, b, c) for x in congruences]
        injective = len(set(images)) == len(images)
        items["4"] = ok and injective
        if not items["4"]:
            witness["4"] = {"join_preserved": ok, "injective": injective}
    else:
        items["4"] = "n/a"
    return report("thm-beautiful", f"{_sname(S)} b={b} c={c}", witness or None,
                  items=items, strict_inclusion=strict)


def check_inverse_R_proposition(rho: Congruence, b: int, c: int) -> CheckReport:
    """For ``S/rho`` inverse: ``rho_b^r = rho_c^r`` iff ``b rho R c rho``; dually with ``l`` and ``L``."""
    S = rho.semigroup
    inst = f"{_sname(S)} rho={list(rho.class_of)} b={b} c={c}"
    Q = rho.quotient
    if not is_inverse_semigroup(Q.quotient):
        return skipped("prop-inverse-r", inst, "S/rho is not inverse")
    one = S.monoid.one
    QM = Q.monoid
    u, v = Q.image1(b), Q.image1(c)
    r_eq = rho_bc_labels(rho, one, b) == rho_bc_labels(rho, one, c)
    l_eq = rho_bc_labels(rho, b, one) == rho_bc_labels(rho, c, one)
    R = green_R_related(QM, u, v)
    L = green_L_related(QM, u, v)
    witness = None
    if r_eq != R or l_eq != L:
        witness = {"b": b, "c": c, "r_equal": r_eq, "R": R, "l_equal": l_eq, "L": L}
    return report("prop-inverse-r", inst, witness)


def main_equation_holds(rho: Congruence, b: int, c: int) -> bool:
    """``uxv = v^-1 v u x v u u^-1`` for every ``x`` in ``S/rho``, ``u = b rho``, ``v = c rho``."""
    Q = rho.quotient
    QM = Q.monoid
    T = QM.semigroup
    u, v = Q.image1(b), Q.image1(c)
    ui = inverse_in_inverse_semigroup(T, u)
    vi = inverse_in_inverse_semigroup(T, v)
    left = T.product(vi, v, u)
    right = T.product(v, u, ui)
    return all(T.product(u, x, v) == T.product(left, x, right) for x in Q.quotient.elements)


def check_main_equation_proposition(rho: Congruence, b: int, c: int) -> CheckReport:
    S = rho.semigroup
    inst = f"{_sname(S)} rho={list(rho.class_of)} b={b} c={c}"
    if not is_inverse_semigroup(rho.quotient.quotient):
        return skipped("prop-main", inst, "S/rho is not inverse")
    a = S.monoid.mul(c, b)
    lhs = rho_bc_labels(rho, b, c) == rho_a_labels(rho, a)
    rhs = main_equation_holds(rho, b, c)
    witness = None if lhs == rhs else {"b": b, "c": c, "equal": lhs, "equation": rhs}
    return report("prop-main", inst, witness)


def sandwich_pairs(S: FiniteSemigroup) -> list[tuple[int, int]]:
    M = S.monoid
    return list(product(range(M.order), repeat=2))
