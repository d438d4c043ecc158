"""Run every claim check over the corpus and collect :class:`CheckReport` rows.

One report is produced per (claim, instance).  An instance fixes the
semigroup and the outer sandwich parameters; inner quantifiers (actions,
congruence pairs, second sandwich pairs) are swept inside it, in index
order, and the first failure becomes the witness.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

from . import bicyclic
from .actions import (
    Action,
    ActionError,
    PreconditionFailed,
    all_actions,
    cayley_action,
    check_cyclic_proposition,
    check_faithfulness_theorem,
    group_action_from_variant,
    is_faithful,
    mididentity_inverse_pairs,
    quotient_cayley_action,
    reconstruct_action,
    representation_exists_brute_force,
)
from .congruences import (
    Congruence,
    all_congruence_labels,
    canonical_labels,
    check_inverse_R_proposition,
    check_main_equation_proposition,
    check_quotient_isomorphism_a,
    check_quotient_isomorphism_bc,
    congruence_closure,
    join,
    rho_bc,
    rho_bc_labels,
    simple_item1_witness,
    simple_item2_witness,
    simple_item3_witness,
    simple_item4_witness,
    regular_in_monoid,
)
from .core import (
    FiniteSemigroup,
    green_R_related,
    is_left_cancellable,
    is_left_identity,
    is_right_cancellable,
    is_right_identity,
    left_right_group_decompose,
    sandwich_set,
)
from .corpus import CorpusEntry, corpus, named_examples, rees_quotient, semilattice
from .oracles import two_sided_cancellation_holds
from .reports import FAIL, PASS, SKIPPED, CheckReport, skipped
from .variants import decompositions, variant


class UnknownClaim(KeyError):
    pass


@dataclass
class SweepConfig:
    max_order: int = 4
    lattice_order: int = 3
    small_action_order: int = 3
    window: int = bicyclic.DEFAULT_WINDOW
    claims: tuple[str, ...] | None = None
    parallelism: int = 1


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    location: str
    quantifiers: str
    sweep: Callable[[SweepConfig], Iterator[CheckReport]] = field(repr=False, compare=False)


# -- shared corpus data -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _corpus(max_order: int) -> tuple[CorpusEntry, ...]:
    return tuple(corpus(max_order))


@lru_cache(maxsize=None)
def _congruence_labels(S: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    return tuple(all_congruence_labels(S))


@lru_cache(maxsize=None)
def _congruences(S: FiniteSemigroup) -> tuple[Congruence, ...]:
    return tuple(Congruence(S, p) for p in _congruence_labels(S))


@lru_cache(maxsize=None)
def action_corpus(S: FiniteSemigroup, small_order: int = 3) -> tuple[Action, ...]:
    """Cayley action on ``S^1``; for ``|S| <= small_order`` also every action
    on at most two points and the Cayley actions of all quotients."""
    found = [cayley_action(S)]
    if S.order <= small_order:
        found += all_actions(S, 1) + all_actions(S, 2)
        found += [quotient_cayley_action(rho) for rho in _congruences(S)]
    out, seen = [], set()
    for A in found:
        if A.act not in seen:
            seen.add(A.act)
            out.append(A)
    return tuple(out)


def _entries(config: SweepConfig, order: int | None = None, named: bool = False) -> list[CorpusEntry]:
    limit = config.max_order if order is None else min(order, config.max_order)
    out = [e for e in _corpus(config.max_order) if e.semigroup.order <= limit]
    if named:
        out += [e for e in named_examples() if e.label == "rees-quotient"]
    return out


def _aggregate(claim_id: str, instance: str, checks: Iterator[CheckReport | dict | None],
               start: float, **details) -> CheckReport:
    """Fold inner results (reports, witness dicts or None for pass) into one report."""
    n_pass = n_skip = 0
    reasons: set[str] = set()
    for r in checks:
        if isinstance(r, CheckReport):
            if r.verdict == SKIPPED:
                n_skip += 1
                reasons.add(r.reason or "")
                continue
            r = r.witness if r.verdict == FAIL else None
        if r is not None:
            return CheckReport(claim_id, instance, FAIL, witness=r,
                               details={"checked": n_pass + 1, **details},
                               elapsed=time.perf_counter() - start)
        n_pass += 1
    if n_pass == 0 and n_skip > 0:
        return CheckReport(claim_id, instance, SKIPPED, reason="; ".join(sorted(reasons)),
                           elapsed=time.perf_counter() - start)
    d = {"checked": n_pass, **details}
    if n_skip:
        d["skipped"] = n_skip
    return CheckReport(claim_id, instance, PASS, details=d, elapsed=time.perf_counter() - start)


def _table_str(S: FiniteSemigroup) -> str:
    return ";".join(" ".join(map(str, row)) for row in S.table)


def _with_table(w: dict | None, S: FiniteSemigroup, **params) -> dict | None:
    if w is None:
        return None
    return {"table": _table_str(S), **params, **w}


# -- section: representations ------------------------------------------------------------

def sweep_lemma_good(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _entries(config, named=True):
        S, start = e.semigroup, time.perf_counter()
        M = S.monoid

        def checks():
            for alpha, beta in product(range(M.order), repeat=2):
                lhs = two_sided_cancellation_holds(M.table, alpha, beta, S.order)
                rhs = is_left_cancellable(S, alpha) and is_right_cancellable(S, beta)
                yield None if lhs == rhs else _with_table(
                    {"injective": lhs, "cancellable": rhs}, S, alpha=alpha, beta=beta)

        yield _aggregate("lemma-good", e.label, checks(), start)


def _decomposition_instances(config: SweepConfig, named: bool = False, regular_only: bool = False):
    for e in _entries(config, named=named):
        S = e.semigroup
        if regular_only and "regular" not in e.tags:
            continue
        for a in S.elements:
            for d in decompositions(S, a):
                yield e, S, a, d


def sweep_thm_faith(config: SweepConfig) -> Iterator[CheckReport]:
    for e, S, a, d in _decomposition_instances(config, named=True):
        start = time.perf_counter()
        inst = f"{e.label} a={a} beta={d.beta} alpha={d.alpha}"
        checks = (_retag(check_faithfulness_theorem(A, a, d.alpha, d.beta), S, A)
                  for A in action_corpus(S, config.small_action_order))
        yield _aggregate("thm-faith", inst, checks, start)


def sweep_prop_cyclic(config: SweepConfig) -> Iterator[CheckReport]:
    for e, S, a, d in _decomposition_instances(config, named=True):
        start = time.perf_counter()
        inst = f"{e.label} a={a} beta={d.beta} alpha={d.alpha}"
        checks = (_retag(check_cyclic_proposition(A, a, d.alpha, d.beta), S, A)
                  for A in action_corpus(S, config.small_action_order))
        yield _aggregate("prop-cyclic", inst, checks, start)


def _retag(r: CheckReport, S: FiniteSemigroup, A: Action) -> CheckReport:
    if r.witness is not None:
        r.witness = {"table": _table_str(S), "action": [list(row) for row in A.act], **r.witness}
    return r


def _faithful_stars(S: FiniteSemigroup, a: int, config: SweepConfig) -> list[Action]:
    V = variant(S, a).semigroup
    return [A for A in action_corpus(V, config.small_action_order) if is_faithful(A)]


def _lemma_obstruction(S: FiniteSemigroup, star: Action, alpha: int, beta: int) -> dict | None:
    """``s != t`` with ``alpha s beta = alpha t beta`` but distinct star columns;
    such a pair rules out any inducing action."""
    M = S.monoid
    for s, t in product(S.elements, repeat=2):
        if s < t and M.product(alpha, s, beta) == M.product(alpha, t, beta) \
                and star.column(s) != star.column(t):
            return {"s": s, "t": t}
    return None


def _condition1(S: FiniteSemigroup, star: Action, alpha: int, beta: int) -> tuple[bool | None, str]:
    """Decide whether some action of ``S`` induces ``star``, with the evidence used."""
    try:
        reconstruct_action(S, star, alpha, beta)
        return True, "reconstructed"
    except PreconditionFailed:
        pass
    if _lemma_obstruction(S, star, alpha, beta) is not None:
        return False, "obstruction"
    brute = representation_exists_brute_force(S, star, alpha, beta)
    return brute, "brute-force" if brute is not None else "undecided"


def _reg_checks(S: FiniteSemigroup, a: int, d, config: SweepConfig, need_pairs: bool):
    cond2 = is_left_cancellable(S, d.alpha) and is_right_cancellable(S, d.beta)
    pairs = mididentity_inverse_pairs(S, d.alpha, d.beta)
    if need_pairs and not pairs:
        yield skipped("thm-reg", "", "no inverse pair gives a mididentity")
        return
    if not need_pairs and cond2 and not pairs:
        yield _with_table({"failure": "cancellable but no mididentity inverse pair"}, S,
                          alpha=d.alpha, beta=d.beta)
        return
    for star in _faithful_stars(S, a, config):
        cond1, how = _condition1(S, star, d.alpha, d.beta)
        if cond1 is None:
            yield skipped("thm-reg", "", "existence undecided")
            continue
        brute = representation_exists_brute_force(S, star, d.alpha, d.beta)
        if cond1 != cond2 or (brute is not None and brute != cond1):
            yield _with_table({"condition1": cond1, "evidence": how, "condition2": cond2,
                               "brute_force": brute}, S, star=[list(r) for r in star.act],
                              alpha=d.alpha, beta=d.beta)
        else:
            yield None


def sweep_thm_reg(config: SweepConfig) -> Iterator[CheckReport]:
    for e, S, a, d in _decomposition_instances(config, regular_only=True):
        start = time.perf_counter()
        inst = f"{e.label} a={a} beta={d.beta} alpha={d.alpha}"
        yield _aggregate("thm-reg", inst, _reg_checks(S, a, d, config, True), start)


def sweep_prop_aaa(config: SweepConfig) -> Iterator[CheckReport]:
    for e, S, a, d in _decomposition_instances(config, regular_only=True):
        start = time.perf_counter()
        inst = f"{e.label} a={a} beta={d.beta} alpha={d.alpha}"
        yield _aggregate("prop-aaa", inst, _reg_checks(S, a, d, config, False), start)


def sweep_thm_easy(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _entries(config):
        S, start = e.semigroup, time.perf_counter()
        if "regular" not in e.tags:
            yield skipped("thm-easy", e.label, "not regular")
            continue

        def checks():
            one_sided = all(is_left_identity(S, x) or is_right_identity(S, x) for x in S.idempotents)
            dec = left_right_group_decompose(S)
            if one_sided != (dec is not None):
                yield _with_table({"idempotents_one_sided": one_sided,
                                   "decomposed": dec is not None}, S)
                return
            yield None
            if dec is None:
                return
            for a in S.elements:
                for star in action_corpus(variant(S, a).semigroup, config.small_action_order):
                    try:
                        group_action_from_variant(S, a, star)
                        yield None
                    except ActionError as exc:
                        yield _with_table({"failure": str(exc)}, S, a=a,
                                          star=[list(r) for r in star.act])

        yield _aggregate("thm-easy", e.label, checks(), start)


# -- section: sandwich congruences ----------------------------------------------------------

def _lattice_entries(config: SweepConfig) -> list[CorpusEntry]:
    return _entries(config, order=config.lattice_order)


def sweep_prop_fact(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _lattice_entries(config):
        S = e.semigroup
        for b, c in product(range(S.monoid.order), repeat=2):
            start = time.perf_counter()
            checks = (_tag_rho(check_quotient_isomorphism_bc(rho, b, c), rho)
                      for rho in _congruences(S))
            yield _aggregate("prop-fact", f"{e.label} b={b} c={c}", checks, start)


def sweep_prop_quotient_a(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _lattice_entries(config):
        S = e.semigroup
        for a in range(S.monoid.order):
            start = time.perf_counter()
            checks = (_tag_rho(check_quotient_isomorphism_a(rho, a), rho) for rho in _congruences(S))
            yield _aggregate("prop-quotient-a", f"{e.label} a={a}", checks, start)


def _tag_rho(r: CheckReport, rho: Congruence) -> CheckReport:
    if r.witness is not None:
        r.witness = {"table": _table_str(rho.semigroup), "rho": list(rho.class_of), **r.witness}
    return r


def sweep_thm_simple(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _lattice_entries(config):
        S = e.semigroup
        congs = _congruences(S)
        m1 = range(S.monoid.order)
        for b, c in product(m1, repeat=2):
            start = time.perf_counter()

            def checks():
                for rho in congs:
                    tag = dict(rho=list(rho.class_of))
                    yield _with_table(simple_item2_witness(rho, b, c), S, **tag)
                    yield _with_table(simple_item3_witness(rho, b, c), S, **tag)
                    for b1, c1 in product(m1, repeat=2):
                        yield _with_table(simple_item1_witness(rho, b, c, b1, c1), S, **tag)
                    for sigma in congs:
                        yield _with_table(simple_item4_witness(rho, sigma, b, c), S,
                                          sigma=list(sigma.class_of), **tag)

            yield _aggregate("thm-simple", f"{e.label} b={b} c={c}", checks(), start)


class _LatticeCache:
    """Per-semigroup memo of sandwich images and joins, keyed by label tuples."""

    def __init__(self, S: FiniteSemigroup):
        self.S = S
        self.labels = _congruence_labels(S)
        self.index = {p: i for i, p in enumerate(self.labels)}
        self.congs = _congruences(S)
        self._join_S: dict[tuple[int, int], int] = {}
        self._join_V: dict[tuple, tuple[int, ...]] = {}

    def meet_index(self, i: int, j: int) -> int:
        return self.index[canonical_labels(zip(self.labels[i], self.labels[j]))]

    def join_index(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._join_S:
            self._join_S[key] = self.index[join(self.congs[i], self.congs[j]).class_of]
        return self._join_S[key]

    def join_on(self, V: FiniteSemigroup, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        if x > y:
            x, y = y, x
        key = (V.table, x, y)
        if key not in self._join_V:
            pairs = [(s, t) for lab in (x, y) for s in V.elements for t in V.elements
                     if s < t and lab[s] == lab[t]]
            self._join_V[key] = congruence_closure(V, pairs).class_of
        return self._join_V[key]


def _labels_subset(x, y) -> bool:
    image: dict[int, int] = {}
    return all(image.setdefault(k, j) == j for k, j in zip(x, y))


def _beautiful_instance(cache: _LatticeCache, b: int, c: int, full: bool) -> Iterator[dict | None]:
    S = cache.S
    M = S.monoid
    V = variant(S, M.mul(c, b)).semigroup
    images = [rho_bc_labels(rho, b, c) for rho in cache.congs]
    n = len(images)
    for i, j in product(range(n), repeat=2):
        want = canonical_labels(zip(images[i], images[j]))
        if images[cache.meet_index(i, j)] != want:
            yield _with_table({"item": 1}, S, b=b, c=c, rho=list(cache.labels[i]),
                              sigma=list(cache.labels[j]))
        else:
            yield None
    if not full:
        return
    regular = regular_in_monoid(S, b) and regular_in_monoid(S, c)
    onto = len(sandwich_set(S, b, c)) == S.order
    for i, j in product(range(n), repeat=2):
        image_of_join = images[cache.join_index(i, j)]
        join_of_images = cache.join_on(V, images[i], images[j])
        tag = dict(b=b, c=c, rho=list(cache.labels[i]), sigma=list(cache.labels[j]))
        if not _labels_subset(join_of_images, image_of_join):
            yield _with_table({"item": 2}, S, **tag)
        elif (regular or onto) and join_of_images != image_of_join:
            yield _with_table({"item": 3 if regular else 4}, S, **tag)
        else:
            yield None
    if onto and len(set(images)) != n:
        yield _with_table({"item": 4, "failure": "not injective"}, S, b=b, c=c)


def _strict_count(cache: _LatticeCache, b: int, c: int) -> int:
    S = cache.S
    V = variant(S, S.monoid.mul(c, b)).semigroup
    images = [rho_bc_labels(rho, b, c) for rho in cache.congs]
    n = len(images)
    return sum(1 for i, j in product(range(n), repeat=2)
               if cache.join_on(V, images[i], images[j]) != images[cache.join_index(i, j)])


def sweep_thm_beautiful(config: SweepConfig) -> Iterator[CheckReport]:
    entries = _entries(config, named=True)
    for e in entries:
        S = e.semigroup
        full = S.order <= config.lattice_order or e.source == "named-example"
        cache = _LatticeCache(S)
        for b, c in product(range(S.monoid.order), repeat=2):
            start = time.perf_counter()
            extra = {"items": "1-4" if full else "1"}
            if full:
                extra["strict_item2"] = _strict_count(cache, b, c)
            yield _aggregate("thm-beautiful", f"{e.label} b={b} c={c}",
                             _beautiful_instance(cache, b, c, full), start, **extra)


def sweep_prop_inverse_r(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _lattice_entries(config):
        S = e.semigroup
        start = time.perf_counter()
        checks = (_tag_rho(check_inverse_R_proposition(rho, b, c), rho)
                  for rho in _congruences(S)
                  for b, c in product(range(S.monoid.order), repeat=2))
        yield _aggregate("prop-inverse-r", e.label, checks, start)


def sweep_prop_main(config: SweepConfig) -> Iterator[CheckReport]:
    for e in _lattice_entries(config):
        S = e.semigroup
        start = time.perf_counter()
        checks = (_tag_rho(check_main_equation_proposition(rho, b, c), rho)
                  for rho in _congruences(S)
                  for b, c in product(range(S.monoid.order), repeat=2))
        yield _aggregate("prop-main", e.label, checks, start)


# -- worked examples ---------------------------------------------------------------------

def example_semilattice() -> CheckReport:
    start = time.perf_counter()
    E = semilattice()
    a, b = 0, 1
    iota = Congruence(E, (0, 1))
    aa = rho_bc(iota, a, a)
    ab = rho_bc(iota, a, b)
    R = green_R_related(E, a, b)
    problems = []
    if not aa.same_relation(ab):
        problems.append("iota_{a,a} != iota_{a,b}")
    if not (aa.is_universal() and ab.is_universal()):
        problems.append("images are not universal")
    if R:
        problems.append("(a,b) is R-related")
    return CheckReport(
        "example-semilattice", "E={a<=b} rho=iota", FAIL if problems else PASS,
        witness={"problems": problems} if problems else None,
        details={"iota_aa": aa.describe(), "iota_ab": ab.describe(), "R(a,b)": R},
        elapsed=time.perf_counter() - start)


def rees_example_congruences(S: FiniteSemigroup | None = None) -> tuple[Congruence, Congruence]:
    S = S or rees_quotient()
    ab, ba, bb = (S.names.index(w) for w in ("ab", "ba", "bb"))
    return congruence_closure(S, [(ab, ba)]), congruence_closure(S, [(ab, bb)])


def example_rees() -> CheckReport:
    start = time.perf_counter()
    S = rees_quotient()
    a, b, ab, ba, bb = (S.names.index(w) for w in ("a", "b", "ab", "ba", "bb"))
    one = S.monoid.one
    rho, sigma = rees_example_congruences(S)
    problems = []
    expected_rho = [{ab, ba}] + [{x} for x in S.elements if x not in (ab, ba)]
    if sorted(map(sorted, expected_rho)) != sorted(map(sorted, rho.classes)):
        problems.append("rho is not (ab,ba) plus the identity")
    expected_sigma = [{ab, bb}] + [{x} for x in S.elements if x not in (ab, bb)]
    if sorted(map(sorted, expected_sigma)) != sorted(map(sorted, sigma.classes)):
        problems.append("sigma is not (ab,bb) plus the identity")
    rb, sb = rho_bc(rho, b, one), rho_bc(sigma, b, one)
    kernel = canonical_labels(S.table[b][s] for s in S.elements)
    if rb.class_of != kernel or sb.class_of != kernel:
        problems.append("rho_{b,1} or sigma_{b,1} is not the kernel of s -> bs")
    big = rho_bc(join(rho, sigma), b, one)
    small = join(rb, sb)
    if not big.related(a, b):
        problems.append("(a,b) not in (rho v sigma)_{b,1}")
    if small.related(a, b):
        problems.append("(a,b) in rho_{b,1} v sigma_{b,1}")
    return CheckReport(
        "example-rees", "{a,b}+/I, I = words of length >= 3", FAIL if problems else PASS,
        witness={"problems": problems} if problems else None,
        details={"rho": rho.describe(), "sigma": sigma.describe(),
                 "rho_b1": rb.describe(), "sigma_b1": sb.describe(),
                 "join_of_images": small.describe(), "image_of_join": big.describe(),
                 "strict_pair": ["a", "b"]},
        elapsed=time.perf_counter() - start)


def sweep_example_semilattice(config: SweepConfig) -> Iterator[CheckReport]:
    yield example_semilattice()


def sweep_example_rees(config: SweepConfig) -> Iterator[CheckReport]:
    yield example_rees()


def sweep_example_bicyclic(config: SweepConfig) -> Iterator[CheckReport]:
    yield bicyclic.verify_example1(config.window)


# -- registry ----------------------------------------------------------------------------

CLAIMS: dict[str, Claim] = {c.claim_id: c for c in [
    Claim("lemma-good",
          "alpha s beta = alpha t beta => s = t for all s,t in S iff alpha is left and beta right cancellable",
          "lemma on two-sided cancellation, representations of variants",
          "every corpus S (order <= max-order, plus the Rees quotient), all alpha, beta in S^1",
          sweep_lemma_good),
    Claim("thm-faith",
          "(S_a,M;alpha,beta) is faithful iff (S,M) is faithful, alpha left and beta right cancellable; "
          "faithful induced action forces a faithful base action",
          "faithfulness theorem for induced representations (with the preceding lemma)",
          "every corpus S, a in S, a = beta alpha over S^1 x S^1, every action in the action corpus",
          sweep_thm_faith),
    Claim("thm-reg",
          "S regular, inverses alpha*, beta* with beta* beta alpha alpha* a mididentity, star faithful: "
          "star is induced from some action of S iff alpha, beta are left/right cancellable",
          "reconstruction theorem for regular semigroups",
          "regular corpus S, a, decompositions; faithful actions of S_a from the action corpus",
          sweep_thm_reg),
    Claim("prop-aaa",
          "S regular without a bicyclic subsemigroup (every finite S): the reconstruction equivalence holds "
          "without assuming the mididentity inverse pair",
          "proposition on regular semigroups free of bicyclic subsemigroups",
          "regular corpus S, a, decompositions; faithful actions of S_a from the action corpus",
          sweep_prop_aaa),
    Claim("thm-easy",
          "S regular: every idempotent is a left or right identity iff S is a left or right group; "
          "for those, every action of every S_a comes from m * s = m.(sa) or m.(as)",
          "characterization of left and right groups via variants",
          "every regular corpus S; all a in S; action corpus of S_a",
          sweep_thm_easy),
    Claim("prop-cyclic",
          "(S_a,M;alpha,beta) is cyclic iff (S,M) is cyclic, M.beta = M and M.alpha contains a generating point",
          "proposition on cyclic representations",
          "every corpus S, a, decompositions, action corpus",
          sweep_prop_cyclic),
    Claim("prop-fact",
          "S_cb / rho_{b,c} is isomorphic to bSc / rho restricted to bSc, via x -> (bxc) rho",
          "factorization proposition for rho_{b,c}",
          "corpus S of order <= lattice-order, all rho in Cong(S), all b, c in S^1",
          sweep_prop_fact),
    Claim("thm-simple",
          "1) L/R-related sandwich images give equal rho_{b,c}; 2) rho in rho_{b,c}; 3) rho_{b,c} = rho iff "
          "b rho, c rho cancellable in (S/rho)^1; 4) monotonicity, reflected when b sigma, c sigma cancellable",
          "theorem on elementary properties of rho_{b,c}",
          "corpus S of order <= lattice-order, rho, sigma in Cong(S), b, c, b1, c1 in S^1",
          sweep_thm_simple),
    Claim("prop-inverse-r",
          "S/rho inverse: rho^r_b = rho^r_c iff b rho R c rho, and rho^l_b = rho^l_c iff b rho L c rho",
          "proposition on inverse quotients and Green's relations",
          "corpus S of order <= lattice-order, rho with S/rho inverse, b, c in S^1",
          sweep_prop_inverse_r),
    Claim("thm-beautiful",
          "1) rho -> rho_{b,c} preserves meets; 2) rho_{b,c} v sigma_{b,c} is contained in (rho v sigma)_{b,c}; "
          "3) joins are preserved when b, c are regular in S^1; 4) if bSc = S the map is an injective lattice map",
          "lattice homomorphism theorem for rho -> rho_{b,c}",
          "item 1 on every corpus S; items 2-4 for order <= lattice-order and the Rees quotient; "
          "all pairs from Cong(S), all b, c in S^1",
          sweep_thm_beautiful),
    Claim("example-semilattice",
          "E = {a <= b}, rho = iota: rho_{a,a} = rho_{a,b} but (a,b) is not R-related",
          "semilattice example (converse of item 1 fails)",
          "single instance",
          sweep_example_semilattice),
    Claim("example-rees",
          "{a,b}+/I with rho = (ab,ba), sigma = (ab,bb): (a,b) in (rho v sigma)_{b,1} but not in "
          "rho_{b,1} v sigma_{b,1}",
          "Rees quotient example (join not preserved)",
          "single instance",
          sweep_example_rees),
    Claim("example-bicyclic",
          "the Cayley representation of B = <a,b | ba = 1> is not induced by a faithful action with "
          "m o (asb) = ms; ab is not a mididentity",
          "bicyclic example (the mididentity hypothesis is needed)",
          "symbolic, window i, j <= window",
          sweep_example_bicyclic),
    Claim("prop-main",
          "S/rho inverse: rho_{b,c} = rho_{cb} iff uxv = v^-1 v u x v u u^-1 for all x, u = b rho, v = c rho",
          "proposition comparing rho_{b,c} with rho_a",
          "corpus S of order <= lattice-order, rho with S/rho inverse, b, c in S^1",
          sweep_prop_main),
    Claim("prop-quotient-a",
          "S_a / rho_a is isomorphic to aSa / rho restricted to aSa, via x -> (axa) rho",
          "quotient proposition for rho_a",
          "corpus S of order <= lattice-order, all rho in Cong(S), all a in S^1",
          sweep_prop_quotient_a),
]}


def explain(claim_id: str) -> str:
    if claim_id not in CLAIMS:
        raise UnknownClaim(claim_id)
    c = CLAIMS[claim_id]
    return (f"{c.claim_id}\n  statement: {c.statement}\n  source: {c.location}\n"
            f"  swept over: {c.quantifiers}\n")


def _run_claim(args: tuple[str, SweepConfig]) -> list[CheckReport]:
    claim_id, config = args
    return list(CLAIMS[claim_id].sweep(config))


def run_battery(config: SweepConfig | None = None) -> list[CheckReport]:
    """Every selected claim over the corpus, in registry order."""
    config = config or SweepConfig()
    ids = list(CLAIMS) if config.claims is None else list(config.claims)
    for cid in ids:
        if cid not in CLAIMS:
            raise UnknownClaim(cid)
    jobs = [(cid, config) for cid in ids]
    if config.parallelism > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            parts = list(pool.map(_run_claim, jobs))
    else:
        parts = [_run_claim(j) for j in jobs]
    return [r for part in parts for r in part]


def summarize(reports: list[CheckReport]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        counts = out.setdefault(r.claim_id, {PASS: 0, FAIL: 0, SKIPPED: 0})
        counts[r.verdict] += 1
    return out
