"""Right actions ``M x S -> M`` given as tables, the induced actions of a
variant, and the reconstruction of an action of ``S`` from one of ``S_a``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .congruences import Congruence, canonical_labels
from .core import (
    FiniteSemigroup,
    SemigroupError,
    inverses_of,
    is_left_cancellable,
    is_mididentity,
    is_right_cancellable,
    left_right_group_decompose,
)
from .reports import CheckReport, report
from .variants import Variant, variant


class ActionError(SemigroupError):
    pass


class DecompositionMismatch(ActionError):
    pass


class PreconditionFailed(ActionError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}{': ' + detail if detail else ''}")


@dataclass(frozen=True)
class Action:
    """``act[m][s] = m . s`` for points ``m`` in ``range(points)``."""

    semigroup: FiniteSemigroup
    points: int
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        act = tuple(tuple(int(x) for x in row) for row in self.act)
        if len(act) != self.points or any(len(r) != self.semigroup.order for r in act):
            raise ActionError(f"action table must be {self.points} x {self.semigroup.order}")
        if any(not 0 <= x < self.points for r in act for x in r):
            raise ActionError("action table entry outside the point set")
        object.__setattr__(self, "act", act)

    def apply(self, m: int, u: int) -> int:
        """``m . u`` for ``u`` in ``S^1``; an adjoined identity fixes every point."""
        if u >= self.semigroup.order:
            return m
        return self.act[m][u]

    def column(self, s: int) -> tuple[int, ...]:
        return tuple(row[s] for row in self.act)


@dataclass(frozen=True)
class InducedAction(Action):
    """``m * s = m . (alpha s beta)``, an action of ``variant.semigroup``."""

    base_action: Action
    variant: Variant
    alpha: int
    beta: int


def action_axiom_witness(A: Action) -> tuple[int, int, int] | None:
    tab = A.semigroup.table
    act = A.act
    for m in range(A.points):
        row = act[m]
        for s in A.semigroup.elements:
            row_ms = act[row[s]]
            tab_s = tab[s]
            for t in A.semigroup.elements:
                if row_ms[t] != row[tab_s[t]]:
                    return (m, s, t)
    return None


def validate_action(A: Action) -> bool:
    return action_axiom_witness(A) is None


def cayley_action(S: FiniteSemigroup) -> Action:
    """Right regular action of ``S`` on ``S^1``."""
    M = S.monoid
    return Action(S, M.order, tuple(tuple(M.mul(m, s) for s in S.elements)
                                    for m in range(M.order)))


def quotient_cayley_action(rho: Congruence) -> Action:
    """``S`` acting on ``(S/rho)^1`` by right multiplication with ``s rho``."""
    Q = rho.quotient
    QM = Q.monoid
    S = rho.semigroup
    return Action(S, QM.order, tuple(tuple(QM.mul(m, Q.projection[s]) for s in S.elements)
                                     for m in range(QM.order)))


def all_actions(S: FiniteSemigroup, points: int) -> list[Action]:
    """Every valid action of ``S`` on ``points`` points, in lexicographic order
    of the column assignment."""
    transforms = list(product(range(points), repeat=points))
    out = []
    for cols in product(transforms, repeat=S.order):
        act = tuple(tuple(cols[s][m] for s in S.elements) for m in range(points))
        A = Action(S, points, act)
        if validate_action(A):
            out.append(A)
    return out


def induced(A: Action, a: int, alpha: int, beta: int) -> InducedAction:
    S = A.semigroup
    if S.monoid.mul(beta, alpha) != a:
        raise DecompositionMismatch(f"beta*alpha = {S.monoid.mul(beta, alpha)}, not {a}")
    V = variant(S, a)
    act = tuple(tuple(A.apply(A.apply(A.apply(m, alpha), s), beta) for s in S.elements)
                for m in range(A.points))
    out = InducedAction(V.semigroup, A.points, act, A, V, alpha, beta)
    bad = action_axiom_witness(out)
    if bad is not None:
        raise ActionError(f"induced action fails the action axiom at {bad}")
    return out


def is_faithful(A: Action) -> bool:
    cols = {A.column(s) for s in A.semigroup.elements}
    return len(cols) == A.semigroup.order


def kernel_congruence(A: Action) -> Congruence:
    return Congruence(A.semigroup, canonical_labels(A.column(s) for s in A.semigroup.elements))


def image_set(A: Action, u: int) -> frozenset[int]:
    """``M . u`` for ``u`` in ``S^1``."""
    return frozenset(A.apply(m, u) for m in range(A.points))


def generating_points(A: Action) -> frozenset[int]:
    return frozenset(m for m in range(A.points) if len(set(A.act[m])) == A.points)


def is_cyclic(A: Action) -> bool:
    return bool(generating_points(A))


def _action_name(A: Action) -> str:
    return "M=" + ";".join("".join(map(str, row)) for row in A.act)


def check_cyclic_proposition(A: Action, a: int, alpha: int, beta: int) -> CheckReport:
    star = induced(A, a, alpha, beta)
    lhs = is_cyclic(star)
    gens = generating_points(A)
    rhs = (bool(gens) and image_set(A, beta) == frozenset(range(A.points))
           and bool(image_set(A, alpha) & gens))
    witness = None if lhs == rhs else {"induced_cyclic": lhs, "conditions": rhs}
    return report("prop-cyclic", f"{_action_name(A)} a={a} alpha={alpha} beta={beta}", witness)


def check_faithfulness_theorem(A: Action, a: int, alpha: int, beta: int) -> CheckReport:
    """Induced faithful iff base faithful with ``alpha`` left and ``beta`` right cancellable."""
    star = induced(A, a, alpha, beta)
    lhs = is_faithful(star)
    base = is_faithful(A)
    rhs = base and is_left_cancellable(A.semigroup, alpha) and is_right_cancellable(A.semigroup, beta)
    witness = None
    if lhs != rhs:
        witness = {"induced_faithful": lhs, "base_faithful": base, "conditions": rhs}
    elif lhs and not base:
        witness = {"lemma": "induced faithful but base not faithful"}
    return report("thm-faith", f"{_action_name(A)} a={a} alpha={alpha} beta={beta}", witness)


# -- reconstruction --------------------------------------------------------------------

def mididentity_inverse_pairs(S: FiniteSemigroup, alpha: int, beta: int) -> list[tuple[int, int]]:
    """All ``(alpha*, beta*)`` of inverses in ``S^1`` with ``beta* beta alpha alpha*``
    a mididentity of ``S``, in index order."""
    M = S.monoid
    T = M.semigroup
    out = []
    for a_star in sorted(inverses_of(T, alpha)):
        for b_star in sorted(inverses_of(T, beta)):
            if is_mididentity(S, M.product(b_star, beta, alpha, a_star)):
                out.append((a_star, b_star))
    return out


def compatibility_witness(A: Action, star: Action, alpha: int, beta: int) -> tuple[int, int] | None:
    """First ``(m, s)`` with ``m . (alpha s beta) != m * s``."""
    M = A.semigroup.monoid
    for m in range(A.points):
        for s in A.semigroup.elements:
            if A.apply(m, M.product(alpha, s, beta)) != star.act[m][s]:
                return (m, s)
    return None


def reconstruct_action(S: FiniteSemigroup, star: Action, alpha: int, beta: int,
                       alpha_star: int | None = None, beta_star: int | None = None) -> Action:
    """An action ``.`` of ``S`` with ``m . (alpha s beta) = m * s``, built as
    ``m . s = m * (alpha* s beta*)``.

    Inverses are searched in index order when not supplied.  Raises
    :class:`PreconditionFailed` naming the first hypothesis that fails.
    """
    M = S.monoid
    T = M.semigroup
    a = M.mul(beta, alpha)
    if a >= S.order:
        raise PreconditionFailed("sandwich-not-in-S", "beta*alpha is the adjoined identity")
    if star.semigroup.table != variant(S, a).semigroup.table:
        raise PreconditionFailed("star-not-on-variant")
    if action_axiom_witness(star) is not None:
        raise PreconditionFailed("star-not-an-action")
    if alpha_star is None or beta_star is None:
        pairs = mididentity_inverse_pairs(S, alpha, beta)
        if not pairs:
            if not inverses_of(T, alpha) or not inverses_of(T, beta):
                raise PreconditionFailed("not-an-inverse", "alpha or beta has no inverse in S^1")
            raise PreconditionFailed("not-a-mididentity", "no inverse pair gives a mididentity")
        alpha_star, beta_star = pairs[0]
    else:
        if alpha_star not in inverses_of(T, alpha):
            raise PreconditionFailed("not-an-inverse", f"{alpha_star} is not an inverse of {alpha}")
        if beta_star not in inverses_of(T, beta):
            raise PreconditionFailed("not-an-inverse", f"{beta_star} is not an inverse of {beta}")
        if not is_mididentity(S, M.product(beta_star, beta, alpha, alpha_star)):
            raise PreconditionFailed("not-a-mididentity")
    if not (is_left_cancellable(S, alpha) and is_right_cancellable(S, beta)):
        raise PreconditionFailed("not-cancellable")
    act = tuple(tuple(star.act[m][M.product(alpha_star, s, beta_star)] for s in S.elements)
                for m in range(star.points))
    out = Action(S, star.points, act)
    bad = action_axiom_witness(out)
    if bad is not None:
        raise ActionError(f"reconstructed table fails the action axiom at {bad}")
    bad = compatibility_witness(out, star, alpha, beta)
    if bad is not None:
        raise ActionError(f"reconstructed action disagrees with star at (m, s) = {bad}")
    return out


def group_action_from_variant(S: FiniteSemigroup, a: int, star: Action) -> tuple[Action, str]:
    """For a left or right group ``S = G x U`` and an action ``*`` of ``S_a``,
    build ``.`` with ``m * s = m . (sa)`` (left group) or ``m . (as)`` (right
    group).  Raises :class:`PreconditionFailed` if ``S`` is neither."""
    dec = left_right_group_decompose(S)
    if dec is None:
        raise PreconditionFailed("not-a-left-or-right-group")
    G = dec.group
    back = dec.inverse_map()
    g, _ = dec.iso[a]
    g_inv = next(h for h in G.elements if G.table[g][h] == G.identity)
    act = []
    for m in range(star.points):
        row = []
        for s in S.elements:
            h, v = dec.iso[s]
            shifted = G.table[h][g_inv] if dec.side == "left" else G.table[g_inv][h]
            row.append(star.act[m][back[(shifted, v)]])
        act.append(tuple(row))
    out = Action(S, star.points, tuple(act))
    if action_axiom_witness(out) is not None:
        raise ActionError("group construction fails the action axiom")
    tab = S.table
    for m in range(star.points):
        for s in S.elements:
            t = tab[s][a] if dec.side == "left" else tab[a][s]
            if out.act[m][t] != star.act[m][s]:
                raise ActionError(f"group construction disagrees with star at ({m}, {s})")
    return out, dec.side


def representation_exists_brute_force(S: FiniteSemigroup, star: Action, alpha: int, beta: int,
                                      limit: int = 1 << 14) -> bool | None:
    """Search every action of ``S`` on ``star.points`` points for one inducing
    ``star``.  Returns None when the search space exceeds ``limit``."""
    if (star.points ** star.points) ** S.order > limit:
        return None
    a = S.monoid.mul(beta, alpha)
    for A in all_actions(S, star.points):
        if induced(A, a, alpha, beta).act == star.act:
            return True
    return False


def actions_equal(x: Action, y: Action) -> bool:
    return x.points == y.points and x.act == y.act


def describe_points(points: Sequence[int]) -> str:
    return "{" + ",".join(map(str, sorted(points))) + "}"
