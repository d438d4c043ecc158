"""The bicyclic monoid ``<a, b | ba = 1>`` in normal form ``a^i b^j``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .reports import CheckReport

DEFAULT_WINDOW = 4


@dataclass(frozen=True, order=True)
class BicyclicElement:
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("exponents must be nonnegative")

    def __mul__(self, other: BicyclicElement) -> BicyclicElement:
        return multiply(self, other)

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append(f"a^{self.i}")
        if self.j:
            parts.append(f"b^{self.j}")
        return " ".join(parts) or "1"


ONE = BicyclicElement(0, 0)
A = BicyclicElement(1, 0)
B = BicyclicElement(0, 1)


def multiply(x: BicyclicElement, y: BicyclicElement) -> BicyclicElement:
    # b^j a^k cancels min(j, k) pairs
    return BicyclicElement(x.i + max(y.i - x.j, 0), y.j + max(x.j - y.i, 0))


def to_word(x: BicyclicElement) -> str:
    return "a" * x.i + "b" * x.j


def from_word(word: str) -> BicyclicElement:
    """Normal form of a word over ``{a, b}``, by rewriting ``ba -> 1``."""
    from .oracles import reduce_bicyclic_word

    reduced = reduce_bicyclic_word(word)
    return BicyclicElement(reduced.count("a"), reduced.count("b"))


def window(k: int = DEFAULT_WINDOW) -> list[BicyclicElement]:
    return [BicyclicElement(i, j) for i, j in product(range(k + 1), repeat=2)]


def is_mididentity_witnessed(u: BicyclicElement, k: int = DEFAULT_WINDOW) -> tuple[BicyclicElement, BicyclicElement] | None:
    """First ``(s, t)`` in the window with ``s u t != s t``."""
    for s, t in product(window(k), repeat=2):
        if s * u * t != s * t:
            return (s, t)
    return None


def verify_example1(k: int = DEFAULT_WINDOW) -> CheckReport:
    """Replay the argument that no faithful action ``o`` of ``B`` satisfies
    ``m o (a s b) = m s``.

    Each step is evaluated in normal form on the window ``i, j <= k``.  The
    report carries the chain of elements and passes when the chain ends in
    the false identity ``1 = ab``.
    """
    start = time.perf_counter()
    steps: list[str] = []
    problems: list[str] = []
    ms = window(k)
    ab = A * B

    if B * A != ONE:
        problems.append("ba != 1")
    steps.append(f"ba = {B * A}, so B_(ba) = B")
    if A * (B * A) * B != ab:
        problems.append("a.ba.b != ab")
    wit = is_mididentity_witnessed(ab, k)
    if wit is None:
        problems.append("no witness that ab is not a mididentity")
    else:
        s, t = wit
        steps.append(f"a.ba.b = {ab} is not a mididentity: {s}.({ab}).{t} = {s * ab * t} != {s * t}")

    # s = 1 in m o (asb) = ms
    if any(m * ONE != m for m in ms):
        problems.append("m * 1 != m on the window")
    steps.append(f"m o ({A * ONE * B}) = m * 1 = m")
    # s = a: a.ab = a^2 b = a.a.b
    a2b = A * ab
    if a2b != A * A * B or any(m * A != from_word(to_word(m) + "a") for m in ms):
        problems.append("a^2 b reduction failed")
    steps.append(f"m o a = (m o a) o ({ab}) = m o ({a2b}) = m * a = ma")
    # s = b: ab.b = a b^2 = a.b.b
    ab2 = ab * B
    if ab2 != A * B * B:
        problems.append("a b^2 reduction failed")
    steps.append(f"m o b = (m o ({ab})) o b = m o ({ab2}) = m * b = mb")

    one_o_a = ONE * A          # 1 o a = 1a
    end = one_o_a * B          # a o b = ab
    steps.append(f"1 = 1 o ({ab}) = (1 o a) o b = {one_o_a} o b = {end}")
    if end == ONE:
        problems.append("chain did not reach a false identity")
    else:
        steps.append(f"contradiction: 1 != {end}")

    elapsed = time.perf_counter() - start
    return CheckReport(
        "example-bicyclic", f"B window={k}", "fail" if problems else "pass",
        witness={"problems": problems} if problems else None,
        details={"chain": steps, "false_identity": [str(ONE), str(end)]},
        elapsed=elapsed,
    )
