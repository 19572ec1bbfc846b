"""Dominating sets and the domination-based selection of packing cycles."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ._bitset import iter_bits, mask_of
from .cycle_params import path_starts
from .digraph import Digraph
from .exceptions import ConstructionError


def _min_dominating_mask(n: int, succ: Sequence[int]) -> int:
    full = (1 << n) - 1
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            d = 0
            covered = 0
            for v in combo:
                d |= 1 << v
                covered |= succ[v]
            if (d | covered) == full:
                return d
    raise AssertionError("the whole vertex set always dominates")


def min_dominating_set(g: Digraph) -> tuple[int, list[int]]:
    """Smallest ``D`` such that every vertex outside ``D`` has an in-neighbor in ``D``.

    Exhaustive over subsets in increasing size; the first hit in
    lexicographic order is returned.
    """
    d = _min_dominating_mask(g.n, g.succ_masks)
    return d.bit_count(), list(iter_bits(d))


def _base_selection(g: Digraph, parts: list[int], union: int, active: list[int],
                    reps: dict[int, int]) -> list[int]:
    """One domination round with a single marked vertex per active part."""
    # j is a source of the auxiliary digraph when no other active part reaches
    # its marked vertex by a path with no internal vertex in the union.
    starts = {j: path_starts(g, reps[j], union) for j in active}
    arcs = {j: [i for i in active if i != j and starts[j] & parts[i]] for j in active}
    free = [j for j in active if not arcs[j]]
    if 3 * len(free) >= len(active):
        return free
    pos = {j: t for t, j in enumerate(active)}
    succ = [0] * len(active)
    free_set = set(free)
    for j in active:
        for i in arcs[j]:
            succ[pos[i]] |= 1 << pos[j]
        if j in free_set:
            for i in active:
                if i not in free_set:
                    succ[pos[i]] |= 1 << pos[j]
    dom = _min_dominating_mask(len(active), succ)
    if 3 * dom.bit_count() > 2 * len(active):
        raise ConstructionError("dominating set larger than two thirds of the auxiliary digraph")
    return [j for j in active if not dom >> pos[j] & 1]


def dominating_selection(g: Digraph, parts: Sequence[Sequence[int]],
                         marked: Sequence[Sequence[int]]) -> list[int]:
    """Select part indices whose marked vertices are shielded from the others.

    ``parts`` are pairwise disjoint vertex sets ``U_0..U_{k-1}`` with union
    ``U``; ``marked[i]`` is a non-empty subset of ``parts[i]``. Returns a
    sorted index list ``I`` with ``|I| * 3**l >= k`` (``l`` the largest marked
    set) such that for every ``i`` in ``I`` and every marked ``u`` of part
    ``i``, either

    * some vertex of ``U`` outside the selected parts reaches ``u`` by a path
      with no internal vertex in ``U``, or
    * no vertex of ``U`` outside part ``i`` reaches ``u`` by such a path.

    Raises
    ------
    ValueError
        On overlapping parts, or marked sets that are empty or stray outside
        their part.
    """
    k = len(parts)
    if len(marked) != k:
        raise ValueError("one marked set per part is required")
    part_masks = [mask_of(p) for p in parts]
    union = 0
    for pm, p in zip(part_masks, parts):
        if not pm:
            raise ValueError("parts must be non-empty")
        if union & pm:
            raise ValueError("parts must be pairwise disjoint")
        union |= pm
    marks = []
    for i, m in enumerate(marked):
        m = sorted(set(m))
        if not m:
            raise ValueError(f"marked set of part {i} is empty")
        if mask_of(m) & ~part_masks[i]:
            raise ValueError(f"marked set of part {i} is not inside the part")
        marks.append(m)
    if k == 0:
        return []
    ell = max(len(m) for m in marks)

    active = list(range(k))
    current = {i: marks[i] for i in active}
    while True:
        reps = {i: current[i][0] for i in active}
        active = _base_selection(g, part_masks, union, active, reps)
        if all(len(current[i]) == 1 for i in active):
            break
        current = {i: current[i] if len(current[i]) == 1 else current[i][1:] for i in active}

    if len(active) * 3 ** ell < k:
        raise ConstructionError("selection smaller than k / 3**l")
    return sorted(active)


def selection_holds(g: Digraph, parts: Sequence[Sequence[int]],
                    marked: Sequence[Sequence[int]], selected: Sequence[int]) -> bool:
    """Check the two shielding conditions of a selection."""
    part_masks = [mask_of(p) for p in parts]
    union = 0
    for pm in part_masks:
        union |= pm
    outside = union
    for i in selected:
        outside &= ~part_masks[i]
    for i in selected:
        for u in marked[i]:
            starts = path_starts(g, u, union)
            if starts & outside:
                continue
            if starts & union & ~part_masks[i]:
                return False
    return True
