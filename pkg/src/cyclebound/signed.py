"""Signed digraphs: cycle signs, balance, switches and the signed bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from ._bitset import iter_bits, mask_of
from ._search import max_disjoint_sets, min_hitting_set
from .boolean_network import BooleanNetwork, table_from_function
from .cycle_params import DEFAULT_FVS_CAP, _min_fvs_mask
from .digraph import DEFAULT_CYCLE_CAP, Cycle, Digraph, enumerate_cycles
from .exceptions import CapExceeded
from .poset_analysis import sum_largest_binomials

DEFAULT_SWITCH_CAP = 24
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SignedDigraph:
    """A digraph with every arc labelled -1, 0 or +1."""

    base: Digraph
    signs: Mapping[tuple[int, int], int]

    def __post_init__(self):
        signs = {(int(u), int(v)): int(s) for (u, v), s in self.signs.items()}
        if set(signs) != set(self.base.arcs):
            raise ValueError("signs must be given for exactly the arcs of the digraph")
        if any(s not in (-1, 0, 1) for s in signs.values()):
            raise ValueError("signs must be -1, 0 or 1")
        object.__setattr__(self, "signs", signs)

    def __hash__(self):
        return hash((self.base, frozenset(self.signs.items())))

    def __eq__(self, other):
        return (isinstance(other, SignedDigraph) and self.base == other.base
                and self.signs == other.signs)

    @property
    def n(self) -> int:
        return self.base.n

    @classmethod
    def uniform(cls, g: Digraph, sign: int) -> "SignedDigraph":
        """``(G, +)`` for ``sign = 1``, ``(G, -)`` for ``sign = -1``."""
        return cls(g, {a: sign for a in g.arcs})

    def sign(self, u: int, v: int) -> int:
        return self.signs[(u, v)]

    def non_positive_heads(self) -> int:
        """Mask of heads of arcs whose sign is not +1."""
        return mask_of(v for (u, v), s in self.signs.items() if s != 1)

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{u} {v} {self.signs[(u, v)]}" for u, v in self.base.sorted_arcs()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SignedDigraph":
        """Parse ``n`` then ``u v s`` lines; ``#`` starts a comment line."""
        rows = [r.split() for r in text.splitlines()
                if r.strip() and not r.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 1:
            raise ValueError("first line must hold the vertex count")
        n = int(rows[0][0])
        signs = {}
        for r in rows[1:]:
            if len(r) != 3:
                raise ValueError(f"expected 'u v s', got {' '.join(r)!r}")
            u, v, s = (int(t) for t in r)
            if (u, v) in signs:
                raise ValueError(f"duplicate arc {u} {v}")
            signs[(u, v)] = s
        return cls(Digraph(n, list(signs)), signs)


def cycle_sign(sd: SignedDigraph, cycle: Cycle | Iterable[int]) -> int:
    """Product of the arc signs along a directed cycle."""
    c = cycle if isinstance(cycle, Cycle) else Cycle(tuple(cycle))
    s = 1
    for a in c.arcs:
        if a not in sd.signs:
            raise ValueError(f"{a} is not an arc")
        s *= sd.signs[a]
    return s


def switch(sd: SignedDigraph, I: Iterable[int]) -> SignedDigraph:
    """Negate the sign of every arc with exactly one end in ``I``."""
    m = mask_of(I)
    signs = {(u, v): (-s if (m >> u & 1) != (m >> v & 1) else s)
             for (u, v), s in sd.signs.items()}
    return SignedDigraph(sd.base, signs)


def is_balanced(sd: SignedDigraph) -> bool:
    """Whether some switch makes every arc positive.

    Equivalent to every directed and undirected cycle being positive. A
    0-labelled arc never becomes positive, so it rules balance out.
    """
    if any(s == 0 for s in sd.signs.values()):
        return False
    side = [-1] * sd.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(sd.n)]
    for (u, v), s in sd.signs.items():
        if u == v:
            if s != 1:
                return False
            continue
        adj[u].append((v, s))
        adj[v].append((u, s))
    for root in range(sd.n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w, s in adj[u]:
                want = side[u] if s == 1 else 1 - side[u]
                if side[w] == -1:
                    side[w] = want
                    stack.append(w)
                elif side[w] != want:
                    return False
    return True


def switch_network(f: BooleanNetwork, I: Iterable[int]) -> BooleanNetwork:
    """The conjugate ``x -> f(x + e_I) + e_I``."""
    m = mask_of(I)
    if m >> f.n:
        raise ValueError("switch set has vertices outside the network")
    tables = []
    for v in range(f.n):
        ins = f.inputs[v]
        t = f.tables[v]
        flip_in = sum(1 << k for k, u in enumerate(ins) if m >> u & 1)
        flip_out = m >> v & 1
        tables.append(table_from_function(
            len(ins),
            lambda xs, t=t, flip_in=flip_in, flip_out=flip_out: (
                (t >> (sum(b << k for k, b in enumerate(xs)) ^ flip_in) & 1) ^ flip_out
            ),
        ))
    return BooleanNetwork(f.inputs, tuple(tables))


# -- frustration and switch searches -------------------------------------

def _arc_arrays(sd: SignedDigraph):
    arcs = sd.base.sorted_arcs()
    us = np.array([u for u, _ in arcs], dtype=np.int64)
    vs = np.array([v for _, v in arcs], dtype=np.int64)
    ss = np.array([sd.signs[a] for a in arcs], dtype=np.int64)
    return us, vs, ss


def _bad_counts(us, vs, ss, masks: np.ndarray) -> np.ndarray:
    cross = ((masks[:, None] >> us[None, :]) ^ (masks[:, None] >> vs[None, :])) & 1
    signed = ss[None, :] * (1 - 2 * cross)
    return (signed != 1).sum(axis=1)


def frustration_index(sd: SignedDigraph, cap: int = DEFAULT_SWITCH_CAP) -> int:
    """Minimum number of non-positive arcs over all switches.

    Switching by ``I`` or by its complement gives the same signs, so only
    sets avoiding the last vertex are scanned.

    Raises
    ------
    CapExceeded
        If ``sd.n`` exceeds ``cap``.
    """
    if sd.n > cap:
        raise CapExceeded(f"n={sd.n} exceeds the switch-enumeration cap {cap}")
    if not sd.signs:
        return 0
    us, vs, ss = _arc_arrays(sd)
    total = 1 << max(sd.n - 1, 0)
    best = len(ss)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        best = min(best, int(_bad_counts(us, vs, ss, masks).min()))
        if best == 0:
            break
    return best


def non_negative_cycles(sd: SignedDigraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Cycles of sign +1 or 0."""
    return [c for c in enumerate_cycles(sd.base, limit=cycle_cap) if cycle_sign(sd, c) >= 0]


def tau_plus(sd: SignedDigraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[int, list[int]]:
    """Smallest vertex set meeting every non-negative cycle."""
    hit = min_hitting_set([c.mask for c in non_negative_cycles(sd, cycle_cap)])
    return hit.bit_count(), list(iter_bits(hit))


def nu_plus(sd: SignedDigraph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[int, list[Cycle]]:
    """Largest family of vertex-disjoint non-negative cycles."""
    cycles = non_negative_cycles(sd, cycle_cap)
    chosen = max_disjoint_sets([c.mask for c in cycles])
    return len(chosen), [cycles[i] for i in chosen]


def _tau_m_from_heads(g: Digraph, heads: int) -> int:
    # a monotone FVS must contain every head of a non-positive arc; the rest
    # is a minimum FVS of what remains
    return heads.bit_count() + _min_fvs_mask(g, g.all_mask & ~heads).bit_count()


def tau_m(sd: SignedDigraph, cap: int = DEFAULT_FVS_CAP) -> tuple[int, list[int]]:
    """Minimum monotone feedback vertex set: an FVS containing the head of
    every arc whose sign is not +1."""
    if sd.n > cap:
        raise CapExceeded(f"n={sd.n} exceeds the feedback-vertex-set cap {cap}")
    g = sd.base
    heads = sd.non_positive_heads()
    rest = _min_fvs_mask(g, g.all_mask & ~heads)
    found = heads | rest
    return found.bit_count(), list(iter_bits(found))


def tau_m_star(sd: SignedDigraph, cap: int = 20) -> tuple[int, list[int]]:
    """Minimum of ``tau_m`` over all switches, with a minimizing switch set.

    Switch sets avoiding the last vertex are visited in Gray-code order
    (complementary sets give equal signs); the head set of non-positive
    arcs is updated incrementally and ``tau_m`` is memoised on it. The
    search stops early once it meets the lower bound ``tau``.

    Raises
    ------
    CapExceeded
        If ``sd.n`` exceeds ``cap``.
    """
    n = sd.n
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the switch-enumeration cap {cap}")
    g = sd.base
    tau = _min_fvs_mask(g, g.all_mask).bit_count()
    arcs = g.sorted_arcs()
    cur = [sd.signs[a] for a in arcs]
    touching: list[list[int]] = [[] for _ in range(n)]
    for k, (u, v) in enumerate(arcs):
        if u != v:
            touching[u].append(k)
            touching[v].append(k)
    bad_in = [0] * n  # number of non-positive arcs into each vertex
    for k, (u, v) in enumerate(arcs):
        if cur[k] != 1:
            bad_in[v] += 1
    memo: dict[int, int] = {}

    def heads() -> int:
        return mask_of(v for v in range(n) if bad_in[v])

    h = heads()
    best = memo.setdefault(h, _tau_m_from_heads(g, h))
    best_set = 0
    I = 0
    for step in range(1, 1 << max(n - 1, 0)):
        if best == tau:
            break
        w = (step & -step).bit_length() - 1
        I ^= 1 << w
        for k in touching[w]:
            v = arcs[k][1]
            was_bad = cur[k] != 1
            cur[k] = -cur[k]
            now_bad = cur[k] != 1
            bad_in[v] += now_bad - was_bad
        h = heads()
        val = memo.get(h)
        if val is None:
            val = memo[h] = _tau_m_from_heads(g, h)
        if val < best:
            best, best_set = val, I
    return best, list(iter_bits(best_set))


def signed_upper_bound(sd: SignedDigraph) -> int:
    """``min(2**tau_plus, sum of the nu_plus+1 largest C(tau*_m, k))``."""
    tp, _ = tau_plus(sd)
    np_, _ = nu_plus(sd)
    tms, _ = tau_m_star(sd)
    ell = min(np_ + 1, tms + 1)
    return min(2 ** tp, sum_largest_binomials(tms, ell))


def signed_parameters(sd: SignedDigraph) -> dict:
    tp, tp_set = tau_plus(sd)
    np_, np_cycles = nu_plus(sd)
    tm, tm_set = tau_m(sd)
    tms, switch_set = tau_m_star(sd)
    return {
        "balanced": is_balanced(sd),
        "frustration": frustration_index(sd),
        "tau_plus": tp,
        "nu_plus": np_,
        "tau_m": tm,
        "tau_m_star": tms,
        "tau_plus_set": tp_set,
        "nu_plus_cycles": [list(c.vertices) for c in np_cycles],
        "tau_m_set": tm_set,
        "tau_m_star_switch": switch_set,
        "upper_bound": min(2 ** tp, sum_largest_binomials(tms, min(np_ + 1, tms + 1))),
    }
