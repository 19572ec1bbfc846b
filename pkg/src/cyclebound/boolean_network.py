"""Boolean networks given by per-component truth tables.

Component ``v`` reads the ordered input list ``inputs[v]``; its truth table
is an int whose bit ``i`` is the output on input valuation ``i``, where the
first listed input is the least significant bit of ``i``. States are ints
with component 0 as the least significant bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from .digraph import Digraph
from .exceptions import CapExceeded, InessentialInputError
from .pointset import PointSet, int_to_state, state_to_int

DEFAULT_STATE_CAP = 24
_CHUNK = 1 << 18

AND, OR, NEITHER = "and", "or", "neither"


# -- truth-table helpers -------------------------------------------------

def _low_half_mask(d: int, k: int) -> int:
    """Bitmask over the ``2**d`` table indices whose bit ``k`` is 0."""
    m = 0
    for i in range(1 << d):
        if not i >> k & 1:
            m |= 1 << i
    return m


def input_behaviour(table: int, d: int, k: int) -> int | None:
    """Sign of the dependence of a table on its ``k``-th input.

    Returns 1 (non-decreasing), -1 (non-increasing), 0 (neither) or None
    when the input is inessential.
    """
    lo_mask = _low_half_mask(d, k)
    lo = table & lo_mask
    hi = (table >> (1 << k)) & lo_mask
    if lo == hi:
        return None
    if not lo & ~hi:
        return 1
    if not hi & ~lo:
        return -1
    return 0


def table_is_monotone(table: int, d: int) -> bool:
    return all(input_behaviour(table, d, k) in (1, None) for k in range(d))


def table_from_function(d: int, fn: Callable[[tuple[int, ...]], int]) -> int:
    """Tabulate ``fn`` over all ``2**d`` input valuations."""
    t = 0
    for i in range(1 << d):
        if fn(tuple(i >> k & 1 for k in range(d))):
            t |= 1 << i
    return t


def and_table(d: int) -> int:
    return 1 << ((1 << d) - 1)


def or_table(d: int) -> int:
    return ((1 << (1 << d)) - 1) & ~1


def threshold_table(d: int, theta: int) -> int:
    """Output 1 iff at least ``theta`` inputs are 1."""
    return table_from_function(d, lambda xs: sum(xs) >= theta)


def table_to_bitstring(table: int, d: int) -> str:
    return "".join(str(table >> i & 1) for i in range(1 << d))


def table_from_bitstring(s: str) -> int:
    if any(ch not in "01" for ch in s):
        raise ValueError(f"table {s!r} is not a bitstring")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


# -- networks ------------------------------------------------------------

@dataclass(frozen=True)
class BooleanNetwork:
    """A Boolean network ``f: {0,1}^n -> {0,1}^n``.

    Parameters
    ----------
    inputs : sequence of sequences of int
        Declared in-neighbors of each component, in table-bit order.
    tables : sequence of int
        Truth tables, one per component, each of ``2**len(inputs[v])`` bits.
    """

    inputs: tuple[tuple[int, ...], ...]
    tables: tuple[int, ...]

    def __post_init__(self):
        inputs = tuple(tuple(int(u) for u in ins) for ins in self.inputs)
        tables = tuple(int(t) for t in self.tables)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "tables", tables)
        n = len(inputs)
        if len(tables) != n:
            raise ValueError("one truth table per component is required")
        for v, (ins, t) in enumerate(zip(inputs, tables)):
            if len(set(ins)) != len(ins):
                raise ValueError(f"component {v} lists an input twice")
            if any(not 0 <= u < n for u in ins):
                raise ValueError(f"component {v} has an input out of range")
            if not 0 <= t < 1 << (1 << len(ins)):
                raise ValueError(f"table of component {v} has more than 2**{len(ins)} bits")

    @property
    def n(self) -> int:
        return len(self.inputs)

    @classmethod
    def from_functions(cls, inputs: Sequence[Sequence[int]],
                       functions: Sequence[Callable[[tuple[int, ...]], int]]) -> "BooleanNetwork":
        """Tabulate Python callables; each receives the tuple of its input values."""
        tables = [table_from_function(len(ins), fn) for ins, fn in zip(inputs, functions)]
        return cls(tuple(tuple(i) for i in inputs), tuple(tables))

    @classmethod
    def identity(cls, n: int) -> "BooleanNetwork":
        return cls(tuple((v,) for v in range(n)), tuple(0b10 for _ in range(n)))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "BooleanNetwork":
        return cls(tuple(() for _ in range(n)), tuple(value & 1 for _ in range(n)))

    def in_degree(self, v: int) -> int:
        return len(self.inputs[v])

    def table_bits(self, v: int) -> str:
        return table_to_bitstring(self.tables[v], len(self.inputs[v]))

    # -- evaluation ------------------------------------------------------

    def evaluate_int(self, x: int) -> int:
        y = 0
        for v, (ins, t) in enumerate(zip(self.inputs, self.tables)):
            idx = 0
            for k, u in enumerate(ins):
                idx |= (x >> u & 1) << k
            y |= (t >> idx & 1) << v
        return y

    def component(self, v: int, x: int) -> int:
        idx = 0
        for k, u in enumerate(self.inputs[v]):
            idx |= (x >> u & 1) << k
        return self.tables[v] >> idx & 1

    @cached_property
    def _table_arrays(self) -> tuple[np.ndarray, ...]:
        return tuple(
            np.array([t >> i & 1 for i in range(1 << len(ins))], dtype=np.uint8)
            for ins, t in zip(self.inputs, self.tables)
        )

    # -- structure -------------------------------------------------------

    def essential_inputs(self, v: int) -> list[int]:
        d = len(self.inputs[v])
        return [u for k, u in enumerate(self.inputs[v])
                if input_behaviour(self.tables[v], d, k) is not None]

    def has_essential_inputs(self) -> bool:
        return all(len(self.essential_inputs(v)) == len(self.inputs[v]) for v in range(self.n))

    def require_essential_inputs(self) -> None:
        """Raise ``InessentialInputError`` unless every declared input matters."""
        for v in range(self.n):
            ess = set(self.essential_inputs(v))
            dead = [u for u in self.inputs[v] if u not in ess]
            if dead:
                raise InessentialInputError(f"component {v} does not depend on inputs {dead}")

    def declared_graph(self) -> Digraph:
        return Digraph(self.n, frozenset((u, v) for v in range(self.n) for u in self.inputs[v]))

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [
                {"inputs": list(ins), "table": table_to_bitstring(t, len(ins))}
                for ins, t in zip(self.inputs, self.tables)
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "BooleanNetwork":
        verts = data["vertices"]
        if int(data["n"]) != len(verts):
            raise ValueError("'n' does not match the number of vertices")
        inputs, tables = [], []
        for v, entry in enumerate(verts):
            ins = tuple(int(u) for u in entry["inputs"])
            bits = str(entry["table"])
            if len(bits) != 1 << len(ins):
                raise ValueError(f"table of vertex {v} must have {1 << len(ins)} entries")
            inputs.append(ins)
            tables.append(table_from_bitstring(bits))
        return cls(tuple(inputs), tuple(tables))

    @classmethod
    def from_json(cls, text: str) -> "BooleanNetwork":
        return cls.from_dict(json.loads(text))


def _check_cap(f: BooleanNetwork, cap: int) -> None:
    if f.n > cap:
        raise CapExceeded(f"n={f.n} exceeds the state-enumeration cap {cap}")


def evaluate(f: BooleanNetwork, x: Sequence[int]) -> tuple[int, ...]:
    """Apply ``f`` to a state given as a 0/1 sequence."""
    if len(x) != f.n:
        raise ValueError(f"state has length {len(x)}, network has {f.n} components")
    return int_to_state(f.evaluate_int(state_to_int(x)), f.n)


def _fixed_in_range(f: BooleanNetwork, start: int, stop: int) -> np.ndarray:
    xs = np.arange(start, stop, dtype=np.int64)
    tabs = f._table_arrays
    # most constraining components first keeps the surviving array small
    for v in range(f.n):
        if xs.size == 0:
            break
        idx = np.zeros(xs.size, dtype=np.int64)
        for k, u in enumerate(f.inputs[v]):
            idx |= ((xs >> u) & 1) << k
        keep = tabs[v][idx] == ((xs >> v) & 1)
        xs = xs[keep]
    return xs


def fixed_points(f: BooleanNetwork, cap: int = DEFAULT_STATE_CAP) -> PointSet:
    """All states ``x`` with ``f(x) = x``, by vectorised sweep over ``{0,1}^n``.

    Raises
    ------
    CapExceeded
        If ``f.n`` exceeds ``cap``.
    """
    _check_cap(f, cap)
    total = 1 << f.n
    found: list[int] = []
    for start in range(0, total, _CHUNK):
        found.extend(int(x) for x in _fixed_in_range(f, start, min(total, start + _CHUNK)))
    return PointSet(f.n, tuple(found))


def count_fixed_points(f: BooleanNetwork, cap: int = DEFAULT_STATE_CAP) -> int:
    return len(fixed_points(f, cap))


def interaction_graph(f: BooleanNetwork) -> Digraph:
    """Arc ``u -> v`` iff ``f_v`` depends on ``x_u`` (loops included).

    Dependence is read off the truth tables, which fully determine ``f_v``
    on its declared inputs; undeclared coordinates never matter.
    """
    return Digraph(f.n, frozenset((u, v) for v in range(f.n) for u in f.essential_inputs(v)))


def signed_arc_labels(f: BooleanNetwork) -> dict[tuple[int, int], int]:
    """Sign of every arc of the interaction graph."""
    labels = {}
    for v in range(f.n):
        d = len(f.inputs[v])
        for k, u in enumerate(f.inputs[v]):
            s = input_behaviour(f.tables[v], d, k)
            if s is not None:
                labels[(u, v)] = s
    return labels


def signed_interaction_graph(f: BooleanNetwork):
    from .signed import SignedDigraph

    labels = signed_arc_labels(f)
    return SignedDigraph(Digraph(f.n, frozenset(labels)), labels)


def is_component_monotone(f: BooleanNetwork, v: int) -> bool:
    return table_is_monotone(f.tables[v], len(f.inputs[v]))


def is_monotone(f: BooleanNetwork) -> bool:
    return all(is_component_monotone(f, v) for v in range(f.n))


def and_or_labels(f: BooleanNetwork) -> list[str]:
    """Per component: ``"and"``, ``"or"`` or ``"neither"``.

    The comparison is against the conjunction or disjunction of the
    essential inputs; an empty conjunction is 1 and an empty disjunction 0.
    A single-input identity is both, and is reported as ``"and"``.
    """
    labels = []
    for v in range(f.n):
        ins = f.inputs[v]
        ess = f.essential_inputs(v)
        pos = [ins.index(u) for u in ess]
        d = len(ins)
        conj = table_from_function(d, lambda xs: all(xs[k] for k in pos))
        disj = table_from_function(d, lambda xs: any(xs[k] for k in pos))
        t = f.tables[v]
        labels.append(AND if t == conj else OR if t == disj else NEITHER)
    return labels


def is_and_or_network(f: BooleanNetwork) -> bool:
    return NEITHER not in and_or_labels(f)
