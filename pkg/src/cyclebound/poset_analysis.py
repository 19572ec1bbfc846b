"""Subsets of the Boolean cube viewed as posets.

Projections onto feedback vertex sets, longest chains, maximum antichains,
(special) k-patterns, lattice checks and the binomial upper bounds on
fixed-point counts of monotone networks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from ._search import max_disjoint_sets
from .boolean_network import BooleanNetwork, interaction_graph, is_component_monotone
from .cycle_params import is_feedback_vertex_set
from .exceptions import ProjectionError
from .pointset import PointSet, leq, to_bitstring

__all__ = [
    "PointSet",
    "Pattern",
    "project",
    "project_onto",
    "longest_chain",
    "max_antichain",
    "max_pattern",
    "has_pattern",
    "is_pattern",
    "is_lattice",
    "sum_largest_binomials",
    "monotone_upper_bound",
]


def project(P: PointSet, I: Sequence[int]) -> list[int]:
    """Restriction ``x -> x_I`` of every point, coordinates in the order of ``I``."""
    out = []
    for x in P.points:
        y = 0
        for k, v in enumerate(I):
            y |= (x >> v & 1) << k
        out.append(y)
    return out


def project_onto(P: PointSet, I: Sequence[int], f: BooleanNetwork,
                 monotone_outside: bool = False) -> PointSet:
    """Restrict the fixed points ``P`` of ``f`` to the feedback vertex set ``I``.

    ``I`` is sorted; coordinate ``k`` of the result is vertex ``I[k]``. The
    restriction is checked to be injective, and with ``monotone_outside`` it
    is also checked to preserve and reflect the order.

    Raises
    ------
    ValueError
        If ``I`` is not a feedback vertex set of the interaction graph, or
        ``monotone_outside`` is claimed for a non-monotone component outside ``I``.
    ProjectionError
        If the restriction is not injective or not an order isomorphism.
    """
    I = sorted(set(I))
    if P.n != f.n:
        raise ValueError("point set and network dimensions differ")
    if not is_feedback_vertex_set(interaction_graph(f), I):
        raise ValueError(f"{I} is not a feedback vertex set of the interaction graph")
    inside = set(I)
    if monotone_outside:
        bad = [v for v in range(f.n) if v not in inside and not is_component_monotone(f, v)]
        if bad:
            raise ValueError(f"components {bad} outside I are not monotone")
    images = project(P, I)
    if len(set(images)) != len(images):
        raise ProjectionError("restriction to I is not injective on the point set")
    if monotone_outside:
        pts = P.points
        for a in range(len(pts)):
            for b in range(len(pts)):
                if leq(pts[a], pts[b]) != leq(images[a], images[b]):
                    raise ProjectionError(
                        f"order not preserved between {to_bitstring(pts[a], P.n)} "
                        f"and {to_bitstring(pts[b], P.n)}"
                    )
    return PointSet(len(I), tuple(images))


# -- chains and antichains -----------------------------------------------

def longest_chain(P: PointSet) -> tuple[int, list[int]]:
    """Largest chain, by longest path in the comparability DAG."""
    pts = sorted(P.points, key=lambda x: (x.bit_count(), x))
    if not pts:
        return 0, []
    length = [1] * len(pts)
    parent = [-1] * len(pts)
    for j, y in enumerate(pts):
        for i in range(j):
            x = pts[i]
            if x != y and leq(x, y) and length[i] + 1 > length[j]:
                length[j] = length[i] + 1
                parent[j] = i
    j = max(range(len(pts)), key=lambda t: length[t])
    chain = []
    while j != -1:
        chain.append(pts[j])
        j = parent[j]
    chain.reverse()
    return len(chain), chain


def max_antichain(P: PointSet) -> tuple[int, list[int]]:
    """Largest antichain via Dilworth: bipartite matching plus Konig cover."""
    pts = list(P.points)
    m = len(pts)
    if m == 0:
        return 0, []
    above = [[j for j in range(m) if j != i and leq(pts[i], pts[j])] for i in range(m)]
    match_right = [-1] * m
    match_left = [-1] * m

    def augment(i: int, seen: list[bool]) -> bool:
        for j in above[i]:
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] == -1 or augment(match_right[j], seen):
                match_right[j] = i
                match_left[i] = j
                return True
        return False

    for i in range(m):
        augment(i, [False] * m)

    # Konig: alternating reachability from unmatched left vertices
    z_left = [False] * m
    z_right = [False] * m
    stack = [i for i in range(m) if match_left[i] == -1]
    for i in stack:
        z_left[i] = True
    while stack:
        i = stack.pop()
        for j in above[i]:
            if not z_right[j] and match_left[i] != j:
                z_right[j] = True
                k = match_right[j]
                if k != -1 and not z_left[k]:
                    z_left[k] = True
                    stack.append(k)
    # cover = (left not in Z) + (right in Z); antichain avoids it on both sides
    anti = [pts[i] for i in range(m) if z_left[i] and not z_right[i]]
    return len(anti), anti


# -- patterns ------------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """Two sequences ``xs``, ``ys`` with ``xs[p] <= ys[q]`` exactly when ``p != q``."""

    n: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.xs)

    @property
    def special(self) -> bool:
        full = (1 << self.n) - 1
        return all(y == full ^ x for x, y in zip(self.xs, self.ys))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "x": [to_bitstring(x, self.n) for x in self.xs],
            "y": [to_bitstring(y, self.n) for y in self.ys],
            "special": self.special,
        }


def is_pattern(P: PointSet, xs: Sequence[int], ys: Sequence[int]) -> bool:
    """Direct check of the pattern definition inside ``P``."""
    if len(xs) != len(ys) or len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        return False
    if any(x not in P for x in xs) or any(y not in P for y in ys):
        return False
    return all(leq(x, y) == (p != q) for p, x in enumerate(xs) for q, y in enumerate(ys))


def _pattern_pairs(P: PointSet) -> tuple[list[tuple[int, int]], list[int]]:
    pts = P.points
    pairs = [(x, y) for x in pts for y in pts if not leq(x, y)]
    adj = []
    for a, (x, y) in enumerate(pairs):
        m = 0
        for b, (x2, y2) in enumerate(pairs):
            if b != a and leq(x, y2) and leq(x2, y):
                m |= 1 << b
        adj.append(m)
    return pairs, adj


def _find_clique(adj: list[int], k: int) -> list[int] | None:
    chosen: list[int] = []

    def rec(cands: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + cands.bit_count() < k:
            return False
        while cands:
            if len(chosen) + cands.bit_count() < k:
                return False
            low = cands & -cands
            a = low.bit_length() - 1
            cands ^= low
            chosen.append(a)
            if rec(cands & adj[a]):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec((1 << len(adj)) - 1) else None


def _special_pattern(P: PointSet, k: int | None) -> tuple[int, Pattern]:
    full = (1 << P.n) - 1
    cands = [x for x in P.points if x and (full ^ x) in P]
    chosen = [cands[i] for i in max_disjoint_sets(cands)]
    if k is not None:
        chosen = chosen[:k]
    chosen.sort()
    return len(chosen), Pattern(P.n, tuple(chosen), tuple(full ^ x for x in chosen))


def has_pattern(P: PointSet, k: int, special: bool = False) -> Pattern | None:
    """A (special) ``k``-pattern of ``P`` if one exists, else None."""
    if k <= 0:
        return Pattern(P.n, (), ())
    if k > P.n:
        return None
    if special:
        size, pat = _special_pattern(P, k)
        return pat if size >= k else None
    pairs, adj = _pattern_pairs(P)
    found = _find_clique(adj, k)
    if found is None:
        return None
    return Pattern(P.n, tuple(pairs[a][0] for a in found), tuple(pairs[a][1] for a in found))


def max_pattern(P: PointSet, special: bool = False) -> tuple[int, Pattern]:
    """Largest ``k`` such that ``P`` has a (special) ``k``-pattern, with a witness.

    Special patterns are exactly pairwise disjoint non-empty sets ``x`` whose
    complement is also in ``P``, so that case reduces to set packing. The
    general case grows ``k`` until no clique of compatible pairs
    ``(x^p, y^p)`` exists; ``k`` never exceeds the dimension.
    """
    if special:
        return _special_pattern(P, None)
    pairs, adj = _pattern_pairs(P)
    best = Pattern(P.n, (), ())
    for k in range(1, P.n + 1):
        found = _find_clique(adj, k)
        if found is None:
            break
        best = Pattern(P.n, tuple(pairs[a][0] for a in found), tuple(pairs[a][1] for a in found))
    return best.k, best


# -- lattices and bounds -------------------------------------------------

def is_lattice(P: PointSet) -> bool:
    """Whether every pair has a join and a meet inside ``P``.

    In the cube, a least upper bound within ``P`` can only be the bitwise
    AND of all upper bounds in ``P``, and dually for meets. The empty set
    is not a lattice.
    """
    pts = P.points
    if not pts:
        return False
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            j = -1
            m = 0
            for z in pts:
                if leq(x | y, z):
                    j &= z
                if leq(z, x & y):
                    m |= z
            if j == -1 or j not in P:
                return False
            if m not in P:
                return False
    return True


def sum_largest_binomials(n: int, ell: int) -> int:
    """Sum of the ``ell`` largest binomial coefficients ``C(n, k)``.

    Raises
    ------
    ValueError
        Unless ``0 <= ell <= n + 1``.
    """
    if n < 0 or not 0 <= ell <= n + 1:
        raise ValueError(f"need 0 <= ell <= n+1, got n={n}, ell={ell}")
    coeffs = sorted((comb(n, k) for k in range(n + 1)), reverse=True)
    return sum(coeffs[:ell])


def monotone_upper_bound(tau: int, nu: int, nu_star: int) -> int:
    """Best upper bound on fixed points of a monotone network from ``tau, nu, nu*``.

    The minimum of ``2**tau``, ``2 + sum of the nu-1 largest C(tau, k)`` and,
    when ``nu* = 1``, ``2**(tau-1) + 1``. An acyclic digraph (``nu = 0``)
    gives exactly one fixed point.
    """
    if not 0 <= nu_star <= nu <= tau:
        raise ValueError(f"need 0 <= nu* <= nu <= tau, got {nu_star}, {nu}, {tau}")
    if nu == 0:
        return 1
    bound = min(2 ** tau, 2 + sum_largest_binomials(tau, nu - 1))
    if nu_star == 1:
        bound = min(bound, 2 ** (tau - 1) + 1)
    return bound
