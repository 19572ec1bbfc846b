"""Exact cycle parameters of digraphs.

``tau`` (minimum feedback vertex set), ``nu`` (maximum cycle packing),
``nu_star`` (maximum special packing), the circumference, principal-path
queries and independent cycle pairs. Every value is certified by exhaustive
search; searches refuse inputs beyond their caps instead of guessing.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from ._bitset import bit, iter_bits, mask_of
from ._search import max_disjoint_sets
from .digraph import (
    DEFAULT_CYCLE_CAP,
    Cycle,
    Digraph,
    Packing,
    enumerate_chordless_cycles,
    enumerate_cycles,
)
from .exceptions import AcyclicError, CapExceeded

DEFAULT_FVS_CAP = 24


# -- feedback vertex sets ------------------------------------------------

def _shortest_cycle(g: Digraph, alive: int) -> list[int] | None:
    best: list[int] | None = None
    succ = g.succ_masks
    for s in iter_bits(alive):
        parent = {s: -1}
        queue = deque([s])
        hit = None
        while queue and hit is None:
            v = queue.popleft()
            if best is not None and _depth(parent, v) + 1 >= len(best):
                break
            for w in iter_bits(succ[v] & alive):
                if w == s:
                    hit = v
                    break
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if hit is not None:
            path = []
            v = hit
            while v != -1:
                path.append(v)
                v = parent[v]
            path.reverse()
            if best is None or len(path) < len(best):
                best = path
                if len(best) <= 2:
                    return best
    return best


def _depth(parent: dict, v: int) -> int:
    d = 0
    while parent[v] != -1:
        v = parent[v]
        d += 1
    return d


def _fvs_within(g: Digraph, alive: int, budget: int) -> int | None:
    """A feedback vertex set of ``g[alive]`` of size at most ``budget``, or None."""
    succ, pred = g.succ_masks, g.pred_masks
    forced = 0
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            vb = 1 << v
            if succ[v] & vb:
                forced |= vb
                alive &= ~vb
                changed = True
            elif not pred[v] & alive or not succ[v] & alive:
                alive &= ~vb
                changed = True
    budget -= forced.bit_count()
    if budget < 0:
        return None
    if not alive:
        return forced
    if budget == 0:
        return None
    cyc = _shortest_cycle(g, alive)
    for v in cyc:
        sub = _fvs_within(g, alive & ~bit(v), budget - 1)
        if sub is not None:
            return sub | forced | bit(v)
    return None


def _min_fvs_mask(g: Digraph, alive: int) -> int:
    k = 0
    while True:
        found = _fvs_within(g, alive, k)
        if found is not None:
            return found
        k += 1


def min_feedback_vertex_set(g: Digraph, cap: int = DEFAULT_FVS_CAP) -> tuple[int, list[int]]:
    """Minimum feedback vertex set, as ``(tau, witness)``.

    Iterative deepening on the size, branching on the vertices of a shortest
    remaining cycle after stripping vertices that lie on no cycle and taking
    looped vertices unconditionally.

    Raises
    ------
    CapExceeded
        If ``g.n`` exceeds ``cap``.
    """
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the feedback-vertex-set cap {cap}")
    found = _min_fvs_mask(g, g.all_mask)
    return found.bit_count(), list(iter_bits(found))


def is_feedback_vertex_set(g: Digraph, vertices: Iterable[int]) -> bool:
    removed = mask_of(vertices)
    return _fvs_within(g, g.all_mask & ~removed, 0) is not None


# -- packings ------------------------------------------------------------

def max_cycle_packing(g: Digraph) -> tuple[int, Packing]:
    """Maximum number of vertex-disjoint cycles, with a witness packing.

    Only chordless cycles are searched: any cycle contains a chordless cycle
    on a subset of its vertices, so some maximum packing is chordless.
    """
    cycles = enumerate_chordless_cycles(g)
    chosen = max_disjoint_sets([c.mask for c in cycles])
    return len(chosen), Packing(tuple(cycles[i] for i in chosen), g)


def circumference(g: Digraph) -> int:
    """Maximum length of a chordless cycle.

    Raises
    ------
    AcyclicError
        If ``g`` has no cycle.
    """
    cycles = enumerate_chordless_cycles(g)
    if not cycles:
        raise AcyclicError("circumference is undefined for an acyclic digraph")
    return max(len(c) for c in cycles)


def has_independent_cycle_pair(g: Digraph) -> bool:
    """Whether two vertex-disjoint cycles have no arc between them.

    Shrinking each cycle of an independent pair to a chordless cycle on a
    subset of its vertices keeps the pair independent, so checking chordless
    cycles suffices.
    """
    cycles = enumerate_chordless_cycles(g)
    outs = [g.out_mask(c.mask) for c in cycles]
    for i, a in enumerate(cycles):
        for j in range(i + 1, len(cycles)):
            b = cycles[j]
            if a.mask & b.mask:
                continue
            if not outs[i] & b.mask and not outs[j] & a.mask:
                return True
    return False


# -- principal paths -----------------------------------------------------

def _back_closure(g: Digraph, target: int, avoid: int) -> int:
    """Vertices outside ``avoid`` reaching ``target`` through vertices outside ``avoid``."""
    pred = g.pred_masks
    seen = 0
    frontier = pred[target] & ~avoid
    while frontier:
        seen |= frontier
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= pred[w]
        frontier = nxt & ~avoid & ~seen
    return seen


def path_starts(g: Digraph, target: int, avoid: int, banned_pred: int | None = None) -> int:
    """Mask of vertices ``s`` with a path ``s -> ... -> target`` of length >= 1
    whose internal vertices all lie outside ``avoid``.

    ``banned_pred`` forbids the single arc ``banned_pred -> target`` as a
    one-arc path (it may still start a longer path).
    """
    pred = g.pred_masks
    starts = pred[target]
    if banned_pred is not None:
        starts &= ~bit(banned_pred)
    for w in iter_bits(_back_closure(g, target, avoid)):
        starts |= pred[w]
    return starts


def _principal_starts(g: Digraph, p: Packing, target: int) -> int:
    return path_starts(g, target, p.vertex_mask, p.packing_predecessor(target))


def _start_mask(g: Digraph, p: Packing, from_cycle, from_sources, from_vertex) -> int:
    m = 0
    if from_cycle is not None:
        m |= p.cycles[from_cycle].mask
    if from_sources:
        m |= g.sources_mask
    if from_vertex is not None:
        m |= bit(from_vertex)
    return m


def exists_principal_path(
    g: Digraph,
    p: Packing,
    target: int,
    *,
    from_cycle: int | None = None,
    from_sources: bool = False,
    from_vertex: int | None = None,
) -> bool:
    """Whether a principal path relative to ``p`` reaches ``target``.

    A principal path uses no packing arc and has no internal vertex on a
    packing cycle. It may be closed, starting and ending at ``target``. The
    start is any vertex of cycle ``p.cycles[from_cycle]``, any source of
    ``g`` (``from_sources``), or ``from_vertex``; several may be combined.
    """
    allowed = _start_mask(g, p, from_cycle, from_sources, from_vertex)
    return bool(_principal_starts(g, p, target) & allowed)


def find_principal_path(
    g: Digraph,
    p: Packing,
    target: int,
    *,
    from_cycle: int | None = None,
    from_sources: bool = False,
    from_vertex: int | None = None,
) -> list[int] | None:
    """A shortest principal path to ``target`` from the given starts, or None."""
    starts = _start_mask(g, p, from_cycle, from_sources, from_vertex)
    packed = p.vertex_mask
    banned = p.arc_set
    parent: dict[int, int] = {}
    queue = deque()
    for s in iter_bits(starts):
        parent[s] = -1
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.successors(x):
            if y == target and (x, y) not in banned:
                path = [y, x]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if not packed >> y & 1 and y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def special_packing_violations(g: Digraph, p: Packing) -> list[int]:
    """Packing vertices breaking the specialness condition.

    ``v`` on cycle ``C`` is a violation when some other packing cycle reaches
    ``v`` by a principal path, while neither ``C`` nor a source does.
    """
    bad = []
    packed = p.vertex_mask
    for c in p.cycles:
        others = packed & ~c.mask
        good = c.mask | g.sources_mask
        for v in c.vertices:
            starts = _principal_starts(g, p, v)
            if starts & others and not starts & good:
                bad.append(v)
    return bad


def is_special_packing(g: Digraph, p: Packing) -> bool:
    return not special_packing_violations(g, p)


def _special_from_cycles(g: Digraph, cycles: list[Cycle]) -> bool:
    packed = 0
    prev = {}
    for c in cycles:
        packed |= c.mask
        vs = c.vertices
        for i, v in enumerate(vs):
            prev[v] = vs[i - 1]
    src = g.sources_mask
    for c in cycles:
        others = packed & ~c.mask
        good = c.mask | src
        for v in c.vertices:
            starts = path_starts(g, v, packed, prev[v])
            if starts & others and not starts & good:
                return False
    return True


def _disjoint_combinations(masks: list[int], k: int) -> Iterator[list[int]]:
    """Index lists of ``k`` pairwise disjoint masks, in lexicographic order."""
    m = len(masks)
    chosen: list[int] = []

    def rec(start: int, used: int) -> Iterator[list[int]]:
        if len(chosen) == k:
            yield list(chosen)
            return
        need = k - len(chosen)
        for i in range(start, m - need + 1):
            if masks[i] & used:
                continue
            chosen.append(i)
            yield from rec(i + 1, used | masks[i])
            chosen.pop()

    yield from rec(0, 0)


def max_special_packing(g: Digraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[int, Packing]:
    """Maximum size of a special packing, with a witness.

    Packings are drawn from all cycles, not only chordless ones. Sizes are
    tried from ``nu`` downwards and the lexicographically first special
    packing of the largest feasible size is returned.

    Raises
    ------
    CapExceeded
        If ``g`` has more than ``cycle_cap`` cycles.
    """
    cycles = enumerate_cycles(g, limit=cycle_cap)
    if not cycles:
        return 0, Packing((), g)
    nu, _ = max_cycle_packing(g)
    masks = [c.mask for c in cycles]
    for k in range(nu, 0, -1):
        for idx in _disjoint_combinations(masks, k):
            chosen = [cycles[i] for i in idx]
            if k == 1 or _special_from_cycles(g, chosen):
                return k, Packing(tuple(chosen), g)
    raise AssertionError("a single cycle is always a special packing")


def cycle_parameters(g: Digraph, fvs_cap: int = DEFAULT_FVS_CAP,
                     cycle_cap: int = DEFAULT_CYCLE_CAP) -> dict:
    """``tau``, ``nu``, ``nu_star`` and ``c`` with their witnesses."""
    tau, fvs = min_feedback_vertex_set(g, cap=fvs_cap)
    nu, packing = max_cycle_packing(g)
    nu_star, special = max_special_packing(g, cycle_cap=cycle_cap)
    try:
        c = circumference(g)
    except AcyclicError:
        c = None
    return {
        "tau": tau,
        "nu": nu,
        "nu_star": nu_star,
        "circumference": c,
        "fvs": fvs,
        "packing": [list(cy.vertices) for cy in packing.cycles],
        "special_packing": [list(cy.vertices) for cy in special.cycles],
    }


__all__ = [
    "DEFAULT_FVS_CAP",
    "min_feedback_vertex_set",
    "is_feedback_vertex_set",
    "max_cycle_packing",
    "circumference",
    "has_independent_cycle_pair",
    "path_starts",
    "exists_principal_path",
    "find_principal_path",
    "special_packing_violations",
    "is_special_packing",
    "max_special_packing",
    "cycle_parameters",
]
