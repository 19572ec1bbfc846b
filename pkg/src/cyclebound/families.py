"""Generators for the named digraph families used throughout the package."""

from __future__ import annotations

import random

from .digraph import Digraph


def build_k_star(n: int) -> Digraph:
    """The digraph K*_n on ``n*n`` vertices.

    Vertex ``(i, j)`` is numbered ``i*n + j``. Arcs go from ``(i, j)`` to
    ``(i, j+1 mod n)``, and from ``(i, i)`` to ``(j, i)`` for every ``j != i``.
    """
    if n < 1:
        raise ValueError("K*_n needs n >= 1")
    arcs = set()
    for i in range(n):
        for j in range(n):
            arcs.add((i * n + j, i * n + (j + 1) % n))
            if i != j:
                arcs.add((i * n + i, j * n + i))
    return Digraph(n * n, frozenset(arcs))


def loop_cycle(n: int) -> Digraph:
    """Directed ``n``-cycle with a loop on every vertex."""
    _need(n, 1)
    arcs = {(v, (v + 1) % n) for v in range(n)} | {(v, v) for v in range(n)}
    return Digraph(n, frozenset(arcs))


def loop_cycle_with_source(n: int) -> Digraph:
    """Vertex 0 feeds every vertex of a looped directed cycle on ``1..n-1``."""
    _need(n, 2)
    m = n - 1
    arcs = set()
    for i in range(m):
        v = 1 + i
        arcs |= {(v, 1 + (i + 1) % m), (v, v), (0, v)}
    return Digraph(n, frozenset(arcs))


def loop_cycle_with_pendants(n: int) -> Digraph:
    """Looped directed cycle on ``0..n/2-1``; vertex ``i`` forms a 2-cycle with ``n/2+i``."""
    if n < 2 or n % 2:
        raise ValueError("this family needs an even n >= 2")
    m = n // 2
    arcs = set()
    for i in range(m):
        arcs |= {(i, (i + 1) % m), (i, i), (i, m + i), (m + i, i)}
    return Digraph(n, frozenset(arcs))


def star_of_two_cycles(n: int) -> Digraph:
    """Vertex 0 forms a 2-cycle with each of ``1..n-1``."""
    _need(n, 2)
    arcs = set()
    for v in range(1, n):
        arcs |= {(0, v), (v, 0)}
    return Digraph(n, frozenset(arcs))


def transitive_tournament_with_loops(n: int) -> Digraph:
    """T'_n: a loop on every vertex and an arc ``u -> v`` whenever ``u > v``."""
    _need(n, 1)
    arcs = {(v, v) for v in range(n)} | {(u, v) for u in range(n) for v in range(u)}
    return Digraph(n, frozenset(arcs))


def directed_cycle(n: int) -> Digraph:
    _need(n, 1)
    return Digraph(n, frozenset((v, (v + 1) % n) for v in range(n)))


def disjoint_loops(n: int) -> Digraph:
    return Digraph(n, frozenset((v, v) for v in range(n)))


def complete_symmetric(n: int) -> Digraph:
    """Loop-less complete symmetric digraph K_n."""
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))


def complete_bipartite_symmetric(n: int) -> Digraph:
    """K_{n,n} with parts ``0..n-1`` and ``n..2n-1``, both arc directions."""
    arcs = set()
    for u in range(n):
        for v in range(n, 2 * n):
            arcs |= {(u, v), (v, u)}
    return Digraph(2 * n, frozenset(arcs))


def nonspecial_example() -> Digraph:
    """An 8-vertex digraph whose maximum packing is not special.

    The cycles ``(1,2,3)``, ``(4,5)`` and ``(6)`` form a maximum packing.
    It is not special because ``6 -> 5`` is a principal path into ``5`` while
    neither ``(4,5)`` nor a source reaches ``5``; the first two cycles alone
    form a special packing. The arcs are listed 1-based below.
    """
    labelled = [
        (1, 5), (1, 7), (1, 8),
        (2, 3), (3, 4), (4, 2), (4, 5),
        (5, 6), (6, 5), (6, 7), (7, 6),
        (7, 8), (8, 2),
        (2, 2), (7, 7),
    ]
    return Digraph(8, frozenset((u - 1, v - 1) for u, v in labelled))


FAMILIES = {
    "loop-cycle": loop_cycle,
    "loop-cycle-source": loop_cycle_with_source,
    "loop-cycle-pendant": loop_cycle_with_pendants,
    "star-of-2-cycles": star_of_two_cycles,
    "tprime": transitive_tournament_with_loops,
    "kstar": build_k_star,
    "cycle": directed_cycle,
    "loops": disjoint_loops,
    "complete": complete_symmetric,
    "complete-bipartite": complete_bipartite_symmetric,
}

ALIASES = {
    "T'": "tprime",
    "t'": "tprime",
    "K*": "kstar",
    "k*": "kstar",
    "K": "complete",
    "Knn": "complete-bipartite",
}


def build_family(name: str, n: int | None = None) -> Digraph:
    """Build a member of a named family.

    ``nonspecial-example`` takes no size. Unknown names raise ``ValueError``.
    """
    if name == "nonspecial-example":
        return nonspecial_example()
    key = ALIASES.get(name, name)
    if key not in FAMILIES:
        known = ", ".join(sorted(list(FAMILIES) + ["nonspecial-example"]))
        raise ValueError(f"unknown family {name!r}; known: {known}")
    if n is None:
        raise ValueError(f"family {name!r} needs a size")
    return FAMILIES[key](n)


def random_digraph(n: int, p: float, rng: random.Random, loops: bool = True,
                   max_in_degree: int | None = None) -> Digraph:
    """Each arc present independently with probability ``p``.

    With ``max_in_degree`` set, surplus in-arcs of a vertex are dropped at
    random.
    """
    arcs = []
    for v in range(n):
        inn = [u for u in range(n) if (loops or u != v) and rng.random() < p]
        if max_in_degree is not None and len(inn) > max_in_degree:
            inn = sorted(rng.sample(inn, max_in_degree))
        arcs.extend((u, v) for u in inn)
    return Digraph(n, frozenset(arcs))


def random_symmetric(n: int, p: float, rng: random.Random) -> Digraph:
    """Loop-less symmetric digraph from an Erdos-Renyi graph."""
    arcs = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs |= {(u, v), (v, u)}
    return Digraph(n, frozenset(arcs))


def _need(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be at least {least}")
