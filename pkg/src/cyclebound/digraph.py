"""Digraphs, cycles and packings, with cycle enumeration and SCCs.

Vertices are ``0..n-1``. Vertex sets are handled internally as int bitmasks
(bit ``v`` set when ``v`` is in the set); the public API speaks lists and
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from ._bitset import bit, iter_bits, mask_of
from .exceptions import CapExceeded

__all__ = [
    "Digraph",
    "Cycle",
    "Packing",
    "strongly_connected_components",
    "enumerate_cycles",
    "enumerate_chordless_cycles",
    "DEFAULT_CYCLE_CAP",
]

DEFAULT_CYCLE_CAP = 5000


@dataclass(frozen=True)
class Digraph:
    """A finite digraph on vertices ``0..n-1``; loops are allowed.

    Parameters
    ----------
    n : int
        Number of vertices.
    arcs : iterable of (int, int)
        Ordered pairs ``(u, v)``. Duplicates are rejected.
    """

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arc_list = [(int(u), int(v)) for u, v in self.arcs]
        arcs = frozenset(arc_list)
        if len(arcs) != len(arc_list):
            raise ValueError("duplicate arcs")
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        """Build a digraph, silently merging repeated arcs."""
        return cls(n, frozenset((int(u), int(v)) for u, v in arcs))

    @cached_property
    def succ_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def pred_masks(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def successors(self, v: int) -> list[int]:
        return list(iter_bits(self.succ_masks[v]))

    def predecessors(self, v: int) -> list[int]:
        """In-neighbors of ``v`` in increasing order (``v`` itself if looped)."""
        return list(iter_bits(self.pred_masks[v]))

    def in_degree(self, v: int) -> int:
        return self.pred_masks[v].bit_count()

    def max_in_degree(self) -> int:
        return max((self.in_degree(v) for v in range(self.n)), default=0)

    def has_loop(self, v: int) -> bool:
        return bool(self.succ_masks[v] >> v & 1)

    @cached_property
    def sources_mask(self) -> int:
        return mask_of(v for v in range(self.n) if not self.pred_masks[v])

    def sources(self) -> list[int]:
        return list(iter_bits(self.sources_mask))

    def out_mask(self, vertices_mask: int) -> int:
        """Union of the out-neighborhoods of a vertex set."""
        out = 0
        for v in iter_bits(vertices_mask):
            out |= self.succ_masks[v]
        return out

    def without_arcs(self, removed: Iterable[tuple[int, int]]) -> "Digraph":
        removed = set(removed)
        return Digraph(self.n, frozenset(a for a in self.arcs if a not in removed))

    def without_arcs_into(self, vertices: Iterable[int]) -> "Digraph":
        heads = set(vertices)
        return Digraph(self.n, frozenset((u, v) for u, v in self.arcs if v not in heads))

    def is_symmetric(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs if u != v)

    def is_loopless(self) -> bool:
        return all(u != v for u, v in self.arcs)

    def is_acyclic(self) -> bool:
        return all(len(c) == 1 and not self.has_loop(next(iter(c)))
                   for c in strongly_connected_components(self))

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        """Serialize as ``n`` on the first line, then one ``u v`` arc per line."""
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.sorted_arcs()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Digraph":
        rows = _content_lines(text)
        if not rows:
            raise ValueError("empty digraph file")
        n = int(rows[0])
        arcs = []
        for row in rows[1:]:
            parts = row.split()
            if len(parts) != 2:
                raise ValueError(f"malformed arc line: {row!r}")
            arcs.append((int(parts[0]), int(parts[1])))
        return cls(n, arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


@dataclass(frozen=True, order=True)
class Cycle:
    """A directed cycle stored in rotation-canonical form.

    The vertex sequence is rotated so that it starts at its smallest vertex;
    ``Cycle((3, 1, 2)) == Cycle((1, 2, 3))``.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if not vs:
            raise ValueError("a cycle needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in cycle {vs}")
        i = vs.index(min(vs))
        object.__setattr__(self, "vertices", vs[i:] + vs[:i])

    @classmethod
    def of(cls, *vertices: int) -> "Cycle":
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @cached_property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def predecessor(self, v: int) -> int:
        """The vertex preceding ``v`` along the cycle."""
        i = self.vertices.index(v)
        return self.vertices[i - 1]

    def is_in(self, g: Digraph) -> bool:
        return all(a in g.arcs for a in self.arcs)

    def has_chord_in(self, g: Digraph) -> bool:
        own = set(self.arcs)
        vs = set(self.vertices)
        return any(u != v and u in vs and v in vs and (u, v) not in own for u, v in g.arcs)


@dataclass(frozen=True)
class Packing:
    """Vertex-disjoint cycles of a host digraph.

    The cycle order given at construction is kept, so cycle indices used by
    principal-path queries refer to that order.
    """

    cycles: tuple[Cycle, ...]
    host: Digraph = field(compare=False, repr=False)

    def __post_init__(self):
        cycles = tuple(c if isinstance(c, Cycle) else Cycle(tuple(c)) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)
        seen = 0
        for c in cycles:
            if not c.is_in(self.host):
                raise ValueError(f"{c.vertices} is not a cycle of the host digraph")
            if seen & c.mask:
                raise ValueError("packing cycles are not vertex-disjoint")
            seen |= c.mask

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def size(self) -> int:
        return len(self.cycles)

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for c in self.cycles:
            m |= c.mask
        return m

    @property
    def vertices(self) -> list[int]:
        return list(iter_bits(self.vertex_mask))

    @cached_property
    def arc_set(self) -> frozenset:
        return frozenset(a for c in self.cycles for a in c.arcs)

    def cycle_index(self, v: int) -> int | None:
        for i, c in enumerate(self.cycles):
            if c.mask >> v & 1:
                return i
        return None

    def packing_predecessor(self, v: int) -> int | None:
        """The unique in-neighbor of ``v`` along its packing cycle."""
        i = self.cycle_index(v)
        return None if i is None else self.cycles[i].predecessor(v)

    def sorted(self) -> "Packing":
        return Packing(tuple(sorted(self.cycles)), self.host)


# -- strongly connected components ---------------------------------------

def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Strongly connected components in topological order.

    No arc goes from a later component to an earlier one. Iterative Tarjan,
    which emits components in reverse topological order.
    """
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    succ = [g.successors(v) for v in range(g.n)]

    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(sorted(comp))
    comps.reverse()
    return comps


# -- cycle enumeration ---------------------------------------------------

def _reach_back(g: Digraph, target: int, allowed: int) -> int:
    """Vertices of ``allowed`` that reach ``target`` inside ``allowed``."""
    seen = bit(target)
    frontier = bit(target)
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.pred_masks[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def enumerate_cycles(g: Digraph, limit: int | None = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """All directed cycles, rotation-canonical and sorted.

    Raises
    ------
    CapExceeded
        If more than ``limit`` cycles exist.
    """
    found: list[Cycle] = []
    succ = g.succ_masks
    for s in range(g.n):
        above = g.all_mask & ~((1 << s) - 1)
        useful = _reach_back(g, s, above)
        if not useful >> s & 1 or not g.pred_masks[s] & useful:
            continue
        path = [s]
        on_path = bit(s)
        stack = [succ[s] & useful]
        while stack:
            cand = stack[-1]
            if not cand:
                stack.pop()
                on_path &= ~bit(path.pop())
                continue
            low = cand & -cand
            stack[-1] = cand ^ low
            w = low.bit_length() - 1
            if w == s:
                found.append(Cycle(tuple(path)))
                if limit is not None and len(found) > limit:
                    raise CapExceeded(f"more than {limit} cycles")
                continue
            if on_path & low:
                continue
            path.append(w)
            on_path |= low
            stack.append(succ[w] & useful & ~(on_path & ~bit(s)))
    found.sort()
    return found


def enumerate_chordless_cycles(g: Digraph) -> list[Cycle]:
    """All chordless cycles, rotation-canonical and sorted.

    A chord joins two distinct cycle vertices, so loops never count as
    chords: a looped vertex lies on its loop and may also lie on longer
    chordless cycles.
    """
    succ = g.succ_masks
    pred = g.pred_masks
    found: list[Cycle] = []

    def extend(path: list[int], on_path: int) -> None:
        s = path[0]
        last = path[-1]
        inner_tail = on_path & ~bit(last)  # path vertices other than last
        inner_head = on_path & ~bit(s)  # path vertices other than s
        cand = succ[last] & ~on_path & ~((1 << (s + 1)) - 1)
        for w in iter_bits(cand):
            if pred[w] & inner_tail:
                continue
            if succ[w] & inner_head:
                continue
            if succ[w] >> s & 1:
                found.append(Cycle(tuple(path + [w])))
                continue
            extend(path + [w], on_path | bit(w))

    for s in range(g.n):
        if g.has_loop(s):
            found.append(Cycle((s,)))
        extend([s], bit(s))
    found.sort()
    return found


def cycles_from(vertex_lists: Sequence[Sequence[int]]) -> list[Cycle]:
    return [Cycle(tuple(vs)) for vs in vertex_lists]
