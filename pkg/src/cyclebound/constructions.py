"""Monotone networks realising the lower bounds on fixed-point counts.

Every builder checks its own postconditions: monotonicity, interaction
graph equal to the input digraph, and that the promised witness states are
fixed points. For ``n <= verify_cap`` the fixed points are also enumerated
and counted against the guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from ._bitset import bit, iter_bits, mask_of
from .boolean_network import (
    BooleanNetwork,
    and_table,
    count_fixed_points,
    interaction_graph,
    is_monotone,
    table_from_function,
    threshold_table,
)
from .cycle_params import (
    circumference,
    is_special_packing,
    max_cycle_packing,
    max_special_packing,
)
from .digraph import Cycle, Digraph, Packing
from .domination import dominating_selection
from .exceptions import AcyclicError, ConstructionError, NotSpecialError
from .families import transitive_tournament_with_loops

DEFAULT_VERIFY_CAP = 20


@dataclass
class Construction:
    """A built network with the number of fixed points it is guaranteed to have.

    ``witnesses`` are states proven fixed at build time. ``fixed_points`` is
    the enumerated count, or None when ``n`` exceeded the verification cap
    (``verified`` is then False).
    """

    name: str
    network: BooleanNetwork
    guaranteed: int
    witnesses: list[int] = field(default_factory=list)
    fixed_points: int | None = None
    verified: bool = False
    details: dict = field(default_factory=dict)


def _check(f: BooleanNetwork, g: Digraph, witnesses: Sequence[int], name: str) -> None:
    if not is_monotone(f):
        raise ConstructionError(f"{name}: network is not monotone")
    if interaction_graph(f) != g:
        raise ConstructionError(f"{name}: interaction graph differs from the input digraph")
    for x in witnesses:
        if f.evaluate_int(x) != x:
            raise ConstructionError(f"{name}: witness state {x} is not a fixed point")


def _finish(c: Construction, g: Digraph, verify_cap: int) -> Construction:
    _check(c.network, g, c.witnesses, c.name)
    if len(set(c.witnesses)) < c.guaranteed:
        raise ConstructionError(f"{c.name}: fewer distinct witnesses than guaranteed")
    if g.n <= verify_cap:
        c.fixed_points = count_fixed_points(c.network, cap=verify_cap)
        if c.fixed_points < c.guaranteed:
            raise ConstructionError(
                f"{c.name}: {c.fixed_points} fixed points, {c.guaranteed} guaranteed"
            )
        c.verified = True
    return c


def _reach(g: Digraph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` (inclusive) inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = g.out_mask(frontier) & allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


# -- nu + 1 --------------------------------------------------------------

def threshold_layers(g: Digraph, packing: Packing) -> list[int]:
    """Masks ``U_0, ..., U_k`` partitioning the vertices along a packing.

    ``U_0`` is what no packing cycle reaches; ``U_p`` is what cycle ``p``
    reaches once earlier layers and later cycles are removed.
    """
    cycles = packing.cycles
    k = len(cycles)
    everything = g.all_mask
    reached = 0
    for c in cycles:
        reached |= _reach(g, c.mask, everything)
    layers = [everything & ~reached]
    used = 0
    for p in range(k):
        later = 0
        for c in cycles[p + 1:]:
            later |= c.mask
        layers.append(_reach(g, cycles[p].mask, everything & ~used & ~later))
        used |= layers[-1]
    if used | layers[0] != everything:
        raise ConstructionError("layers do not cover the vertex set")
    return layers


def threshold_network(g: Digraph, packing: Packing | None = None,
                      verify_cap: int = DEFAULT_VERIFY_CAP) -> Construction:
    """Threshold network with at least ``nu + 1`` fixed points.

    Vertex ``v`` in layer ``p`` fires when at least ``theta_v`` in-neighbors
    are 1, where ``theta_v`` counts its in-neighbors in layers ``0..p``. The
    states ``x^q`` (layers ``0..q`` set to 1) are fixed, giving a chain of
    ``k + 1`` fixed points for a packing of size ``k``. Defaults to the
    maximum packing found by :func:`max_cycle_packing`.
    """
    if g.n == 0:
        raise ValueError("the digraph must have at least one vertex")
    if packing is None:
        _, packing = max_cycle_packing(g)
    packing = packing.sorted()
    layers = threshold_layers(g, packing)
    layer_of = {}
    for p, m in enumerate(layers):
        for v in iter_bits(m):
            layer_of[v] = p
    inputs, tables, thetas = [], [], []
    for v in range(g.n):
        ins = g.predecessors(v)
        below = 0
        for m in layers[: layer_of[v] + 1]:
            below |= m
        theta = sum(1 for u in ins if below >> u & 1)
        inputs.append(tuple(ins))
        tables.append(threshold_table(len(ins), theta))
        thetas.append(theta)
    f = BooleanNetwork(tuple(inputs), tuple(tables))
    witnesses = []
    acc = 0
    for m in layers:
        acc |= m
        witnesses.append(acc)
    c = Construction("threshold", f, len(packing) + 1, witnesses,
                     details={"layers": [list(iter_bits(m)) for m in layers],
                              "thresholds": thetas,
                              "packing": [list(cy.vertices) for cy in packing.cycles]})
    return _finish(c, g, verify_cap)


# -- 2 ** nu* ------------------------------------------------------------

def absorbed_closure(g: Digraph, on: int) -> int:
    """Largest ``J`` outside ``on`` built by adding non-source vertices whose
    in-neighbors all lie in ``on`` or in ``J`` so far."""
    src = g.sources_mask
    pred = g.pred_masks
    j = 0
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            vb = bit(v)
            if (on | j | src) & vb:
                continue
            if not pred[v] & ~(on | j):
                j |= vb
                changed = True
    return j


def special_packing_network(g: Digraph, packing: Packing | None = None,
                            verify_cap: int = DEFAULT_VERIFY_CAP) -> Construction:
    """Network with at least ``2**k`` fixed points from a special packing of size ``k``.

    A packing vertex ``v`` computes ``x_{v'} OR AND(other in-neighbors)``
    where ``v'`` is its predecessor on its cycle (just ``x_{v'}`` when ``v'``
    is its only in-neighbor); sources are constant 0; every other vertex is
    the conjunction of its in-neighbors. Each subset of cycles, switched on
    together with its absorbed closure, is a fixed point. Defaults to a
    maximum special packing.

    Raises
    ------
    NotSpecialError
        If ``packing`` is not special.
    """
    if packing is None:
        _, packing = max_special_packing(g)
    if not is_special_packing(g, packing):
        raise NotSpecialError("the packing is not special")
    packed = packing.vertex_mask
    src = g.sources_mask
    inputs, tables = [], []
    for v in range(g.n):
        ins = g.predecessors(v)
        d = len(ins)
        if packed >> v & 1:
            vp = packing.packing_predecessor(v)
            others = [k for k, u in enumerate(ins) if u != vp]
            kp = ins.index(vp)
            if others:
                t = table_from_function(
                    d, lambda xs, kp=kp, others=others: xs[kp] or all(xs[k] for k in others))
            else:
                t = table_from_function(d, lambda xs, kp=kp: xs[kp])
        elif src >> v & 1:
            t = 0
        else:
            t = and_table(d)
        inputs.append(tuple(ins))
        tables.append(t)
    f = BooleanNetwork(tuple(inputs), tuple(tables))
    witnesses = []
    cycles = packing.cycles
    for sub in range(1 << len(cycles)):
        on = 0
        for i in iter_bits(sub):
            on |= cycles[i].mask
        witnesses.append(on | absorbed_closure(g, on))
    c = Construction("special-packing", f, 2 ** len(cycles), witnesses,
                     details={"packing": [list(cy.vertices) for cy in cycles]})
    return _finish(c, g, verify_cap)


# -- 2 ** (k / 3**l) -----------------------------------------------------

def short_cycle_network(g: Digraph, cycles: Sequence[Cycle] | None = None,
                        verify_cap: int = DEFAULT_VERIFY_CAP) -> Construction:
    """Network with at least ``2**|I|`` fixed points, ``|I| >= k / 3**l``.

    ``cycles`` are ``k`` disjoint cycles of length at most ``l`` (default: a
    maximum packing of chordless cycles). A dominating selection ``I`` is
    taken, arcs into the unselected cycles ``W`` are dropped, the selected
    cycles form a special packing of the thinned digraph, and the network
    built on it is patched with conjunctions on ``W``.
    """
    if cycles is None:
        _, p = max_cycle_packing(g)
        cycles = list(p.cycles)
    packing = Packing(tuple(cycles), g)
    cycles = list(packing.cycles)
    k = len(cycles)
    if k == 0:
        raise ValueError("at least one cycle is required")
    ell = max(len(c) for c in cycles)
    parts = [list(c.vertices) for c in cycles]
    selected = dominating_selection(g, parts, parts)
    if len(selected) * 3 ** ell < k:
        raise ConstructionError("selection below k / 3**l")
    w = 0
    for i in range(k):
        if i not in selected:
            w |= cycles[i].mask
    thinned = g.without_arcs_into(iter_bits(w))
    sub = Packing(tuple(cycles[i] for i in selected), thinned)
    if not is_special_packing(thinned, sub):
        raise ConstructionError("selected cycles are not special in the thinned digraph")
    inner = special_packing_network(thinned, sub, verify_cap=-1)
    inputs = list(inner.network.inputs)
    tables = list(inner.network.tables)
    for v in iter_bits(w):
        ins = g.predecessors(v)
        inputs[v] = tuple(ins)
        tables[v] = and_table(len(ins))
    f = BooleanNetwork(tuple(inputs), tuple(tables))
    c = Construction("short-cycles", f, 2 ** len(selected), list(inner.witnesses),
                     details={"cycles": parts, "max_length": ell,
                              "selected": selected, "dropped": list(iter_bits(w))})
    return _finish(c, g, verify_cap)


# -- T'_n ----------------------------------------------------------------

def transitive_tournament_network(n: int, verify_cap: int = DEFAULT_VERIFY_CAP) -> Construction:
    """``f_{n-1} = x_{n-1}`` and ``f_v = x_v OR AND(x_u : u > v)``: exactly
    ``2**(n-1) + 1`` fixed points on the looped transitive tournament."""
    if n < 1:
        raise ValueError("n must be at least 1")
    inputs, tables = [], []
    for v in range(n):
        ins = tuple(range(v, n))
        if len(ins) == 1:
            t = 0b10
        else:
            t = table_from_function(len(ins), lambda xs: xs[0] or all(xs[1:]))
        inputs.append(ins)
        tables.append(t)
    f = BooleanNetwork(tuple(inputs), tuple(tables))
    top = bit(n - 1)
    witnesses = [x for x in range(1 << min(n - 1, 12)) if not x & top]
    witnesses.append((1 << n) - 1)
    expected = 2 ** (n - 1) + 1
    c = Construction("tprime", f, min(expected, len(witnesses)), witnesses)
    _finish(c, transitive_tournament_with_loops(n), verify_cap)
    c.guaranteed = expected
    if c.fixed_points is not None and c.fixed_points != expected:
        raise ConstructionError(f"tprime: {c.fixed_points} fixed points, expected {expected}")
    return c


# -- report --------------------------------------------------------------

def lower_bound_report(g: Digraph) -> dict:
    """The three lower bounds ``nu + 1``, ``2**nu*`` and ``2**floor(nu / 3**c)``.

    Raises
    ------
    AcyclicError
        If ``g`` has no cycle.
    """
    c = circumference(g)
    nu, _ = max_cycle_packing(g)
    nu_star, special = max_special_packing(g)
    bounds = {
        "threshold": nu + 1,
        "special-packing": 2 ** nu_star,
        "short-cycles": 2 ** math.floor(nu / 3 ** c),
    }
    name = max(bounds, key=lambda k: bounds[k])
    return {
        "parameters": {"nu": nu, "nu_star": nu_star, "circumference": c},
        "bounds": bounds,
        "best": bounds[name],
        "witness": name,
        "special_packing": [list(cy.vertices) for cy in special.cycles],
    }


BUILDERS = {
    "threshold": threshold_network,
    "special-packing": special_packing_network,
    "short-cycles": short_cycle_network,
}


def build(kind: str, g: Digraph, verify_cap: int = DEFAULT_VERIFY_CAP) -> Construction:
    """Dispatch by construction name; ``tprime`` requires ``g`` to be T'_n."""
    if kind == "tprime":
        if g != transitive_tournament_with_loops(g.n):
            raise ValueError("the tprime construction needs the looped transitive tournament")
        return transitive_tournament_network(g.n, verify_cap)
    if kind not in BUILDERS:
        known = ", ".join(sorted(list(BUILDERS) + ["tprime"]))
        raise ValueError(f"unknown construction {kind!r}; known: {known}")
    if g.is_acyclic() and kind != "threshold":
        raise AcyclicError("the digraph has no cycle")
    return BUILDERS[kind](g, verify_cap=verify_cap)
