"""Command line entry point: ``semivariant <subcommand> ...``.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a check fails and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bicyclic, harness
from .actions import (
    generating_points,
    induced,
    is_cyclic,
    is_faithful,
    kernel_congruence,
    reconstruct_action,
)
from .congruences import (
    all_congruences,
    congruence_closure,
    join,
    meet,
    quotient,
    rho_a,
    rho_bc,
)
from .core import FiniteSemigroup, SemigroupError
from .corpus import default_workers, enumerate_semigroups, named_examples
from .formats import (
    FormatError,
    format_action,
    format_congruence,
    format_congruences,
    format_semigroup,
    format_semigroups,
    parse_action,
    parse_congruence,
    parse_semigroup,
)
from .variants import variant


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _semigroup(path: str) -> FiniteSemigroup:
    return parse_semigroup(_read(path))


def element(S: FiniteSemigroup, token: str, in_monoid: bool = True) -> int:
    """Parse an element of ``S`` (or ``S^1``): an index, ``one``, or a name."""
    M = S.monoid
    limit = M.order if in_monoid else S.order
    if token.isdigit():
        x = int(token)
    elif token == "one" and in_monoid:
        x = M.one
    elif M.semigroup.names is not None and token in M.semigroup.names:
        x = M.semigroup.names.index(token)
    else:
        raise UsageError(f"unknown element {token!r}")
    if not 0 <= x < limit:
        raise UsageError(f"element {token!r} is out of range")
    return x


def _out(text: str) -> None:
    sys.stdout.write(text)


# -- handlers ------------------------------------------------------------------------------

def cmd_validate(args) -> int:
    S = _semigroup(args.semigroup)
    ident = "none" if S.identity is None else S.name(S.identity)
    print(f"ok order={S.order} identity={ident}", file=sys.stderr)
    _out(format_semigroup(S))
    return 0


def cmd_variant(args) -> int:
    S = _semigroup(args.semigroup)
    _out(format_semigroup(variant(S, element(S, args.sandwich)).semigroup))
    return 0


def cmd_induce(args) -> int:
    S = _semigroup(args.semigroup)
    A = parse_action(_read(args.action), S)
    alpha, beta = element(S, args.alpha), element(S, args.beta)
    _out(format_action(induced(A, S.monoid.mul(beta, alpha), alpha, beta)))
    return 0


def cmd_faithful(args) -> int:
    S = _semigroup(args.semigroup)
    _out(("true" if is_faithful(parse_action(_read(args.action), S)) else "false") + "\n")
    return 0


def cmd_kernel(args) -> int:
    S = _semigroup(args.semigroup)
    _out(format_congruence(kernel_congruence(parse_action(_read(args.action), S))))
    return 0


def cmd_cyclic(args) -> int:
    S = _semigroup(args.semigroup)
    A = parse_action(_read(args.action), S)
    gens = sorted(generating_points(A))
    _out(("true" if is_cyclic(A) else "false") + "\n")
    _out("generators: " + " ".join(map(str, gens)) + "\n" if gens else "generators:\n")
    return 0


def cmd_reconstruct(args) -> int:
    S = _semigroup(args.semigroup)
    alpha, beta = element(S, args.alpha), element(S, args.beta)
    V = variant(S, S.monoid.mul(beta, alpha)).semigroup
    star = parse_action(_read(args.star), V)
    a_star = None if args.alpha_star is None else element(S, args.alpha_star)
    b_star = None if args.beta_star is None else element(S, args.beta_star)
    _out(format_action(reconstruct_action(S, star, alpha, beta, a_star, b_star)))
    return 0


def cmd_closure(args) -> int:
    S = _semigroup(args.semigroup)
    pairs = [(element(S, s, False), element(S, t, False)) for s, t in args.pair or []]
    _out(format_congruence(congruence_closure(S, pairs)))
    return 0


def _two_congruences(args):
    S = _semigroup(args.semigroup)
    return S, parse_congruence(_read(args.rho), S), parse_congruence(_read(args.sigma), S)


def cmd_meet(args) -> int:
    _, rho, sigma = _two_congruences(args)
    _out(format_congruence(meet(rho, sigma)))
    return 0


def cmd_join(args) -> int:
    _, rho, sigma = _two_congruences(args)
    _out(format_congruence(join(rho, sigma)))
    return 0


def cmd_rho_bc(args) -> int:
    S = _semigroup(args.semigroup)
    rho = parse_congruence(_read(args.rho), S)
    _out(format_congruence(rho_bc(rho, element(S, args.b), element(S, args.c))))
    return 0


def cmd_rho_a(args) -> int:
    S = _semigroup(args.semigroup)
    rho = parse_congruence(_read(args.rho), S)
    _out(format_congruence(rho_a(rho, element(S, args.a))))
    return 0


def cmd_quotient(args) -> int:
    S = _semigroup(args.semigroup)
    rho = parse_congruence(_read(args.rho), S)
    _out(format_semigroup(quotient(S, rho).quotient))
    return 0


def cmd_cong_all(args) -> int:
    _out(format_congruences(all_congruences(_semigroup(args.semigroup))))
    return 0


def cmd_corpus(args) -> int:
    if args.corpus_command == "enumerate":
        items = enumerate_semigroups(args.order, allow_large=args.allow_large,
                                     workers=args.workers or default_workers())
        print(f"{len(items)} semigroups of order {args.order}", file=sys.stderr)
        _out(format_semigroups(items))
    else:
        _out(format_semigroups(e.semigroup for e in named_examples()))
    return 0


def cmd_bicyclic(args) -> int:
    r = bicyclic.verify_example1(args.window)
    for step in r.details["chain"]:
        _out(step + "\n")
    lhs, rhs = r.details["false_identity"]
    _out(f"false identity: {lhs} = {rhs}\n")
    print(f"{r.verdict}: example-bicyclic", file=sys.stderr)
    return 0 if r.passed else 1


def cmd_check(args) -> int:
    requested = list(args.claim or []) + ([args.claim_id] if args.claim_id else [])
    if args.all == bool(requested):
        raise UsageError("check needs exactly one of --all or a claim id")
    unknown = [c for c in requested if c not in harness.CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim {unknown[0]!r}")
    claims = None if args.all else tuple(dict.fromkeys(requested))
    config = harness.SweepConfig(
        max_order=args.max_order, window=args.window, claims=claims,
        parallelism=args.workers or default_workers(),
    )
    reports = harness.run_battery(config)
    for r in reports:
        _out((r.to_json() if args.json else r.to_line()) + "\n")
    summary = harness.summarize(reports)
    for cid, counts in summary.items():
        print(f"{cid}: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped",
              file=sys.stderr)
    if args.figure:
        from .plotting import plot_verdicts

        plot_verdicts(reports, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 1 if any(r.failed for r in reports) else 0


def cmd_explain(args) -> int:
    try:
        _out(harness.explain(args.claim))
    except harness.UnknownClaim:
        raise UsageError(f"unknown claim {args.claim!r}") from None
    return 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semivariant",
                                description="Variants of finite semigroups, induced actions "
                                            "and sandwich congruences.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *files):
        sp = sub.add_parser(name, help=help_, description=help_)
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "validate a semigroup file and echo it", "semigroup")
    add("variant", cmd_variant, "print the variant S_a", "semigroup").add_argument(
        "--sandwich", "-a", required=True, help="sandwich element a (index, name or 'one')")
    sp = add("induce", cmd_induce, "print the induced action m*s = m.(alpha s beta)", "semigroup", "action")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    add("faithful", cmd_faithful, "report whether an action is faithful", "semigroup", "action")
    add("kernel", cmd_kernel, "print the kernel congruence of an action", "semigroup", "action")
    add("cyclic", cmd_cyclic, "report cyclicity and generating points", "semigroup", "action")
    sp = add("reconstruct", cmd_reconstruct,
             "rebuild an action of S from an action of S_(beta alpha)", "semigroup", "star")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--alpha-star")
    sp.add_argument("--beta-star")
    add("closure", cmd_closure, "least congruence containing the given pairs", "semigroup").add_argument(
        "--pair", nargs=2, action="append", metavar=("S", "T"))
    add("meet", cmd_meet, "intersection of two congruences", "semigroup", "rho", "sigma")
    add("join", cmd_join, "join of two congruences", "semigroup", "rho", "sigma")
    sp = add("rho-bc", cmd_rho_bc, "the congruence rho_{b,c} on S_cb", "semigroup", "rho")
    sp.add_argument("--b", required=True)
    sp.add_argument("--c", required=True)
    add("rho-a", cmd_rho_a, "the congruence rho_a on S_a", "semigroup", "rho").add_argument(
        "--a", required=True)
    add("quotient", cmd_quotient, "print S/rho", "semigroup", "rho")
    add("cong-all", cmd_cong_all, "list every congruence", "semigroup")

    sp = add("corpus", cmd_corpus, "enumerate small semigroups or print the named examples")
    csub = sp.add_subparsers(dest="corpus_command", required=True)
    ce = csub.add_parser("enumerate", help="all semigroups of one order up to isomorphism")
    ce.add_argument("--order", type=int, required=True)
    ce.add_argument("--allow-large", action="store_true", help="permit order 5 (slow)")
    ce.add_argument("--workers", type=int)
    csub.add_parser("examples", help="the named example semigroups")

    sp = add("bicyclic", cmd_bicyclic, "bicyclic monoid checks")
    bsub = sp.add_subparsers(dest="bicyclic_command", required=True)
    bsub.add_parser("verify-example1", help="replay the bicyclic counterexample").add_argument(
        "--window", type=int, default=bicyclic.DEFAULT_WINDOW)

    sp = add("check", cmd_check, "run claim checks over the corpus")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("claim_id", nargs="?", help="claim to check (same as --claim)")
    sp.add_argument("--claim", action="append", help="claim to check; repeatable")
    sp.add_argument("--max-order", type=int, default=4)
    sp.add_argument("--window", type=int, default=bicyclic.DEFAULT_WINDOW)
    sp.add_argument("--json", action="store_true", help="one JSON object per line")
    sp.add_argument("--workers", type=int, help="worker processes (default $SEMIVARIANT_WORKERS or 1)")
    sp.add_argument("--figure", help="also render verdict counts to this image file")

    add("explain", cmd_explain, "describe a claim", "claim")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, SemigroupError, harness.UnknownClaim) as exc:
        print(f"semivariant {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
