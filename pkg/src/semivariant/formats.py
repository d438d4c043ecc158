"""Plain-text formats for semigroups, actions and congruences.

All formats are linefeed-terminated, base-10, single-space separated::

    semigroup 2          action 2 2          congruence 3
    0 0                  0 0                 0 0 1
    0 1                  1 0
    names: a b
"""

from __future__ import annotations

from .actions import Action
from .congruences import Congruence
from .core import FiniteSemigroup, SemigroupError


class FormatError(SemigroupError):
    pass


def _ints(line: str, n: int, what: str) -> tuple[int, ...]:
    parts = line.split(" ")
    if len(parts) != n or any(not p.isdigit() for p in parts):
        raise FormatError(f"{what}: expected {n} nonnegative integers, got {line!r}")
    return tuple(int(p) for p in parts)


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _header(line: str, keyword: str, count: int) -> tuple[int, ...]:
    parts = line.split(" ")
    if parts[0] != keyword or len(parts) != count + 1 or not all(p.isdigit() for p in parts[1:]):
        raise FormatError(f"expected header '{keyword}' with {count} integer(s), got {line!r}")
    return tuple(int(p) for p in parts[1:])


def format_semigroup(S: FiniteSemigroup) -> str:
    out = [f"semigroup {S.order}"]
    out += [" ".join(map(str, row)) for row in S.table]
    if S.names is not None:
        out.append("names: " + " ".join(S.names))
    return "\n".join(out) + "\n"


def parse_semigroup(text: str) -> FiniteSemigroup:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty semigroup record")
    (n,) = _header(lines[0], "semigroup", 1)
    if n < 1:
        raise FormatError("semigroup order must be positive")
    if len(lines) < n + 1:
        raise FormatError(f"expected {n} table rows")
    rows = tuple(_ints(lines[1 + i], n, f"row {i}") for i in range(n))
    rest = lines[n + 1:]
    names = None
    if rest:
        if len(rest) != 1 or not rest[0].startswith("names: "):
            raise FormatError(f"unexpected trailing content {rest[0]!r}")
        names = tuple(rest[0][len("names: "):].split(" "))
        if len(names) != n or any(not x for x in names):
            raise FormatError(f"expected {n} names")
    return FiniteSemigroup(rows, names)


def format_semigroups(items) -> str:
    return "\n".join(format_semigroup(S) for S in items)


def parse_semigroups(text: str) -> list[FiniteSemigroup]:
    out, block = [], []
    for line in text.split("\n"):
        if line == "":
            if block:
                out.append(parse_semigroup("\n".join(block) + "\n"))
                block = []
        else:
            block.append(line)
    if block:
        out.append(parse_semigroup("\n".join(block) + "\n"))
    return out


def format_action(A: Action) -> str:
    out = [f"action {A.points} {A.semigroup.order}"]
    out += [" ".join(map(str, row)) for row in A.act]
    return "\n".join(out) + "\n"


def parse_action(text: str, S: FiniteSemigroup) -> Action:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty action record")
    points, n = _header(lines[0], "action", 2)
    if n != S.order:
        raise FormatError(f"action is over {n} elements but the semigroup has {S.order}")
    if len(lines) != points + 1:
        raise FormatError(f"expected {points} action rows")
    rows = tuple(_ints(lines[1 + m], n, f"point {m}") for m in range(points))
    return Action(S, points, rows)


def format_congruence(rho: Congruence) -> str:
    return f"congruence {rho.order}\n" + " ".join(map(str, rho.class_of)) + "\n"


def parse_congruence(text: str, S: FiniteSemigroup) -> Congruence:
    lines = _lines(text)
    if len(lines) != 2:
        raise FormatError("a congruence record has exactly two lines")
    (n,) = _header(lines[0], "congruence", 1)
    if n != S.order:
        raise FormatError(f"congruence is over {n} elements but the semigroup has {S.order}")
    return Congruence(S, _ints(lines[1], n, "class labels"))


def format_congruences(items) -> str:
    return "\n".join(format_congruence(c) for c in items)
