"""Exact set-packing and hitting-set searches over bitmask families.

Both searches are deterministic: candidates are explored in the order they
are given, and the first optimum met is the one returned.
"""

from __future__ import annotations

from ._bitset import lowest, popcount


def max_disjoint_sets(masks: list[int]) -> list[int]:
    """Indices of a maximum family of pairwise disjoint masks.

    Branches on the lowest vertex still covered by a candidate: either one of
    the candidates containing it is taken, or the vertex is left unused.
    """
    best: list[int] = []
    chosen: list[int] = []

    def bound(cands: list[int]) -> int:
        union = 0
        mins = 0
        shortest = None
        for c in cands:
            m = masks[c]
            union |= m
            mins |= m & -m
            k = popcount(m)
            if shortest is None or k < shortest:
                shortest = k
        return min(popcount(mins), popcount(union) // shortest)

    def rec(cands: list[int]) -> None:
        nonlocal best
        if not cands:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + bound(cands) <= len(best):
            return
        union = 0
        for c in cands:
            union |= masks[c]
        v = lowest(union)
        vb = 1 << v
        for c in cands:
            if masks[c] & vb:
                mc = masks[c]
                chosen.append(c)
                rec([d for d in cands if not masks[d] & mc])
                chosen.pop()
        rec([d for d in cands if not masks[d] & vb])

    rec([i for i, m in enumerate(masks) if m])
    return sorted(best)


def _drop_supersets(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def min_hitting_set(masks: list[int]) -> int:
    """A minimum vertex mask meeting every mask in ``masks``.

    Iterative deepening on the size; each level branches on the elements of
    a smallest set not hit yet.
    """
    if any(m == 0 for m in masks):
        raise ValueError("cannot hit an empty set")
    family = _drop_supersets(masks)
    if not family:
        return 0

    def rec(sets: list[int], k: int) -> int | None:
        if not sets:
            return 0
        if k == 0:
            return None
        # disjoint sets need distinct hitters
        used = 0
        lb = 0
        for m in sets:
            if not m & used:
                used |= m
                lb += 1
        if lb > k:
            return None
        target = min(sets, key=popcount)
        rest_bits = target
        while rest_bits:
            low = rest_bits & -rest_bits
            rest_bits ^= low
            sub = rec([m for m in sets if not m & low], k - 1)
            if sub is not None:
                return sub | low
        return None

    k = 0
    while True:
        found = rec(family, k)
        if found is not None:
            return found
        k += 1
