from __future__ import annotations

import sys

import pytest

from semivariant.core import FiniteSemigroup
from semivariant.corpus import rees_quotient, semilattice


def cyclic_group(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple(i for _ in range(n)) for i in range(n)))


def right_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple(range(n)) for _ in range(n)))


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    cells = [(i, j) for i in range(p) for j in range(q)]
    return FiniteSemigroup(tuple(tuple(cells.index((x[0], y[1])) for y in cells) for x in cells))


@pytest.fixture
def E() -> FiniteSemigroup:
    return semilattice()


@pytest.fixture
def LZ() -> FiniteSemigroup:
    return left_zero(2)


@pytest.fixture
def Z2() -> FiniteSemigroup:
    return cyclic_group(2)


@pytest.fixture(scope="session")
def rees() -> FiniteSemigroup:
    return rees_quotient()


def idx(S: FiniteSemigroup, *words: str):
    out = tuple(S.names.index(w) for w in words)
    return out[0] if len(out) == 1 else out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
