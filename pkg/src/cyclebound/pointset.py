"""Finite subsets of the Boolean cube.

A state of ``{0,1}^n`` is encoded as an int whose bit ``v`` is component
``v``. In text form, component 0 is the leftmost character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


def state_to_int(x: Sequence[int]) -> int:
    out = 0
    for v, b in enumerate(x):
        if b not in (0, 1):
            raise ValueError(f"state component {v} is {b!r}, expected 0 or 1")
        out |= b << v
    return out


def int_to_state(x: int, n: int) -> tuple[int, ...]:
    return tuple(x >> v & 1 for v in range(n))


def to_bitstring(x: int, n: int) -> str:
    return "".join(str(x >> v & 1) for v in range(n))


def from_bitstring(s: str) -> int:
    s = s.strip()
    if any(ch not in "01" for ch in s):
        raise ValueError(f"not a bitstring: {s!r}")
    return sum(1 << v for v, ch in enumerate(s) if ch == "1")


@dataclass(frozen=True)
class PointSet:
    """A set of states of ``{0,1}^n`` ordered componentwise.

    ``points`` is kept sorted and duplicate-free.
    """

    n: int
    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(int(p) for p in self.points)))
        limit = 1 << self.n
        for p in pts:
            if not 0 <= p < limit:
                raise ValueError(f"state {p} does not fit in dimension {self.n}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of_states(cls, n: int, states: Iterable[Sequence[int]]) -> "PointSet":
        return cls(n, tuple(state_to_int(s) for s in states))

    @classmethod
    def full_cube(cls, n: int) -> "PointSet":
        return cls(n, tuple(range(1 << n)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x: int) -> bool:
        return x in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.points)

    def states(self) -> list[tuple[int, ...]]:
        return [int_to_state(p, self.n) for p in self.points]

    def complement(self, x: int) -> int:
        return ((1 << self.n) - 1) ^ x

    def to_text(self) -> str:
        return "".join(to_bitstring(p, self.n) + "\n" for p in self.points)

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "PointSet":
        rows = [r.strip() for r in text.splitlines() if r.strip() and not r.startswith("#")]
        if n is None:
            if not rows:
                raise ValueError("cannot infer the dimension of an empty point set")
            n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError(f"row {r!r} does not have length {n}")
        return cls(n, tuple(from_bitstring(r) for r in rows))


def leq(x: int, y: int) -> bool:
    """Componentwise order on encoded states."""
    return x & ~y == 0
