"""Brute-force ground truth on tiny instances.

``phi_m_exact`` maximises the fixed-point count over every monotone network
whose interaction graph is exactly ``G``; ``phi_exact`` does the same for
networks with a prescribed signed interaction graph. ``verify_theorems``
checks every bound of the package against these exact values.
"""

from __future__ import annotations

import itertools
import math
import random
from functools import lru_cache
from typing import Callable

import numpy as np

from .boolean_network import BooleanNetwork, fixed_points, input_behaviour
from .cycle_params import (
    circumference,
    has_independent_cycle_pair,
    max_cycle_packing,
    max_special_packing,
    min_feedback_vertex_set,
)
from .digraph import Digraph
from .exceptions import AcyclicError, BudgetExceeded, CapExceeded
from .families import random_digraph
from .poset_analysis import (
    has_pattern,
    is_lattice,
    longest_chain,
    monotone_upper_bound,
    project_onto,
    sum_largest_binomials,
)
from .signed import (
    SignedDigraph,
    frustration_index,
    is_balanced,
    nu_plus,
    tau_m,
    tau_m_star,
    tau_plus,
)

MAX_ARITY = 5
MAX_SIGNED_MIXED_ARITY = 4
DEFAULT_BUDGET = 10 ** 8
DEFAULT_ORACLE_CAP = 16


# -- function enumeration ------------------------------------------------

@lru_cache(maxsize=None)
def _all_monotone(d: int) -> tuple[int, ...]:
    if d == 0:
        return (0, 1)
    half = 1 << (d - 1)
    prev = _all_monotone(d - 1)
    # the last input is the most significant table bit: f = lo on x_last=0, hi on 1
    return tuple(sorted(lo | hi << half for lo in prev for hi in prev if not lo & ~hi))


def is_all_essential(table: int, d: int) -> bool:
    return all(input_behaviour(table, d, k) is not None for k in range(d))


def enumerate_monotone_functions(d: int, require_all_essential: bool = False) -> list[int]:
    """Truth tables of all monotone Boolean functions of ``d <= 5`` variables.

    With ``require_all_essential`` only functions depending on every
    variable are kept.
    """
    if not 0 <= d <= MAX_ARITY:
        raise ValueError(f"arity {d} outside 0..{MAX_ARITY}")
    tables = _all_monotone(d)
    if require_all_essential:
        return [t for t in tables if is_all_essential(t, d)]
    return list(tables)


def _flip_inputs(table: int, d: int, flip: int) -> int:
    out = 0
    for i in range(1 << d):
        if table >> (i ^ flip) & 1:
            out |= 1 << i
    return out


def functions_with_signs(signs: list[int]) -> list[int]:
    """Tables whose dependence on input ``k`` has exactly sign ``signs[k]``."""
    d = len(signs)
    if 0 not in signs:
        if d > MAX_ARITY:
            raise ValueError(f"arity {d} exceeds {MAX_ARITY}")
        flip = sum(1 << k for k, s in enumerate(signs) if s == -1)
        return [_flip_inputs(t, d, flip) for t in enumerate_monotone_functions(d, True)]
    if d > MAX_SIGNED_MIXED_ARITY:
        raise ValueError(f"0-signed inputs supported only up to arity {MAX_SIGNED_MIXED_ARITY}")
    return [t for t in range(1 << (1 << d))
            if all(input_behaviour(t, d, k) == s for k, s in enumerate(signs))]


# -- exact maximisation --------------------------------------------------

def _agreement_masks(n: int, v: int, inputs: tuple[int, ...], tables: list[int]) -> list[int]:
    """For each table, the set of states (as a ``2**n``-bit int) where component ``v`` is fixed."""
    xs = np.arange(1 << n, dtype=np.int64)
    idx = np.zeros(1 << n, dtype=np.int64)
    for k, u in enumerate(inputs):
        idx |= ((xs >> u) & 1) << k
    xv = ((xs >> v) & 1).astype(bool)
    d = len(inputs)
    out = []
    for t in tables:
        arr = np.array([t >> i & 1 for i in range(1 << d)], dtype=bool)
        agree = arr[idx] == xv
        out.append(int.from_bytes(np.packbits(agree, bitorder="little").tobytes(), "little"))
    return out


def _maximise(n: int, inputs: list[tuple[int, ...]], candidates: list[list[int]],
              budget: int) -> tuple[int, list[int]]:
    total = math.prod(len(c) for c in candidates)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate networks exceed the budget {budget}")
    if any(not c for c in candidates):
        raise ValueError("some vertex admits no function")
    masks = [_agreement_masks(n, v, inputs[v], candidates[v]) for v in range(n)]
    best = -1
    best_choice: list[int] = []
    choice = [0] * n

    def rec(v: int, cur: int) -> None:
        nonlocal best, best_choice
        if cur.bit_count() <= best:
            return
        if v == n:
            best = cur.bit_count()
            best_choice = list(choice)
            return
        for i, m in enumerate(masks[v]):
            choice[v] = i
            rec(v + 1, cur & m)

    rec(0, (1 << (1 << n)) - 1)
    return best, best_choice


def phi_m_exact(g: Digraph, budget: int = DEFAULT_BUDGET,
                cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, BooleanNetwork]:
    """Maximum number of fixed points of a monotone network with interaction graph ``g``.

    Each vertex ranges over the monotone functions depending on all of its
    in-neighbors; the product is searched with branch and bound on the set
    of states that remain fixed. The witness is the first maximiser in
    enumeration order.

    Raises
    ------
    ValueError
        If a vertex has in-degree above 5.
    BudgetExceeded
        If the number of candidate networks exceeds ``budget``.
    CapExceeded
        If ``g.n`` exceeds ``cap``.
    """
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the oracle cap {cap}")
    inputs = [tuple(g.predecessors(v)) for v in range(g.n)]
    if any(len(i) > MAX_ARITY for i in inputs):
        raise ValueError(f"in-degree above {MAX_ARITY}")
    cands = [enumerate_monotone_functions(len(i), True) for i in inputs]
    return _solve(g, inputs, cands, budget)


def phi_exact(sd: SignedDigraph, budget: int = DEFAULT_BUDGET,
              cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, BooleanNetwork]:
    """Maximum number of fixed points of a network with signed interaction graph ``sd``."""
    g = sd.base
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the oracle cap {cap}")
    inputs = [tuple(g.predecessors(v)) for v in range(g.n)]
    cands = [functions_with_signs([sd.signs[(u, v)] for u in inputs[v]]) for v in range(g.n)]
    return _solve(g, inputs, cands, budget)


def _solve(g, inputs, cands, budget):
    if g.n == 0:
        return 1, BooleanNetwork((), ())
    best, choice = _maximise(g.n, inputs, cands, budget)
    f = BooleanNetwork(tuple(inputs), tuple(cands[v][choice[v]] for v in range(g.n)))
    if len(fixed_points(f, cap=g.n)) != best:
        raise AssertionError("oracle witness does not reproduce its count")
    return best, f


# -- corpora -------------------------------------------------------------

def _canonical(n: int, arcs: list[tuple[int, int]]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in arcs))
        if best is None or key < best:
            best = key
    return best


def small_digraph_corpus(max_n: int = 4, max_in_degree: int = 3) -> list[Digraph]:
    """All digraphs on ``1..max_n`` vertices (loops allowed) with in-degree at
    most ``max_in_degree``, one per isomorphism class."""
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        per_vertex = [
            [c for r in range(min(n, max_in_degree) + 1)
             for c in itertools.combinations(range(n), r)]
            for _ in range(n)
        ]
        for choice in itertools.product(*per_vertex):
            arcs = [(u, v) for v, ins in enumerate(choice) for u in ins]
            key = _canonical(n, arcs)
            if key in seen:
                continue
            seen.add(key)
            out.append(Digraph(n, frozenset(key)))
    return out


def random_digraph_corpus(count: int, n: int = 5, seed: int = 0, p: float = 0.35,
                          max_in_degree: int = 3) -> list[Digraph]:
    rng = random.Random(seed)
    return [random_digraph(n, p, rng, loops=True, max_in_degree=max_in_degree)
            for _ in range(count)]


def random_monotone_network(g: Digraph, rng: random.Random) -> BooleanNetwork:
    """Uniform choice of an essential monotone function at every vertex."""
    inputs = [tuple(g.predecessors(v)) for v in range(g.n)]
    tables = [rng.choice(enumerate_monotone_functions(len(i), True)) for i in inputs]
    return BooleanNetwork(tuple(inputs), tuple(tables))


# -- bound sweep ---------------------------------------------------------

def _line(report: list, name: str, fn: Callable[[], tuple]) -> None:
    """Append ``{check, lhs, rhs, relation, pass}``; errors become skipped lines."""
    try:
        out = fn()
    except (CapExceeded, BudgetExceeded, ValueError, AcyclicError) as exc:
        report.append({"check": name, "status": "skipped", "error": str(exc)})
        return
    if out is None:
        report.append({"check": name, "status": "n/a"})
        return
    lhs, rel, rhs, ok = out
    report.append({"check": name, "lhs": lhs, "relation": rel, "rhs": rhs,
                   "status": "pass" if ok else "fail"})


def fixed_point_constraints(f: BooleanNetwork, tau_set: list[int], nu: int, nu_star: int) -> dict:
    """The four structural constraints on fixed points projected onto a minimum FVS."""
    L = project_onto(fixed_points(f), tau_set, f, monotone_outside=True)
    chain, _ = longest_chain(L)
    return {
        "lattice": is_lattice(L),
        "chain": chain,
        "pattern": has_pattern(L, nu + 1) is not None,
        "special_pattern": has_pattern(L, nu_star + 1, special=True) is not None,
        "size": len(L),
    }


def verify_digraph(g: Digraph, budget: int = DEFAULT_BUDGET) -> dict:
    tau, fvs = min_feedback_vertex_set(g)
    nu, _ = max_cycle_packing(g)
    nu_star, _ = max_special_packing(g)
    try:
        c = circumference(g)
    except AcyclicError:
        c = None
    lines: list = []
    params = {"n": g.n, "tau": tau, "nu": nu, "nu_star": nu_star, "circumference": c}
    try:
        phi, witness = phi_m_exact(g, budget=budget)
        params["phi_m"] = phi
    except (BudgetExceeded, CapExceeded, ValueError) as exc:
        phi, witness = None, None
        lines.append({"check": "phi_m exact", "status": "skipped", "error": str(exc)})

    _line(lines, "nu* <= nu <= tau", lambda: (nu_star, "<=", [nu, tau], nu_star <= nu <= tau))
    _line(lines, "tau <= c * nu",
          lambda: None if c is None else (tau, "<=", c * nu, tau <= c * nu))
    if phi is not None:
        if nu >= 1:
            _line(lines, "phi_m <= 2 + sum of nu-1 largest C(tau,k)",
                  lambda: (phi, "<=", 2 + sum_largest_binomials(tau, nu - 1),
                           phi <= 2 + sum_largest_binomials(tau, nu - 1)))
        _line(lines, "phi_m <= 2**tau", lambda: (phi, "<=", 2 ** tau, phi <= 2 ** tau))
        _line(lines, "nu <= 1 implies phi_m <= 2",
              lambda: None if nu > 1 else (phi, "<=", 2, phi <= 2))
        _line(lines, "nu* = 1 implies phi_m <= 2**(tau-1) + 1",
              lambda: None if nu_star != 1 else
              (phi, "<=", 2 ** (tau - 1) + 1, phi <= 2 ** (tau - 1) + 1))
        _line(lines, "nu <= 2 implies phi_m <= 4",
              lambda: None if nu > 2 else (phi, "<=", 4, phi <= 4))
        _line(lines, "phi_m <= combined upper bound",
              lambda: (phi, "<=", monotone_upper_bound(tau, nu, nu_star),
                       phi <= monotone_upper_bound(tau, nu, nu_star)))
        _line(lines, "phi_m >= nu + 1", lambda: (phi, ">=", nu + 1, phi >= nu + 1))
        _line(lines, "phi_m >= 2**nu*", lambda: (phi, ">=", 2 ** nu_star, phi >= 2 ** nu_star))
        _line(lines, "phi_m >= 2**floor(nu / 3**c)",
              lambda: None if c is None else
              (phi, ">=", 2 ** (nu // 3 ** c), phi >= 2 ** (nu // 3 ** c)))
        _line(lines, "phi_m = 2**tau iff nu* = tau",
              lambda: ([phi == 2 ** tau], "==", [nu_star == tau],
                       (phi == 2 ** tau) == (nu_star == tau)))
        _line(lines, "in-degree <= 2, no independent cycles implies phi_m = nu + 1",
              lambda: None if g.max_in_degree() > 2 or has_independent_cycle_pair(g)
              else (phi, "==", nu + 1, phi == nu + 1))

        def four():
            r = fixed_point_constraints(witness, fvs, nu, nu_star)
            ok = (r["lattice"] and r["chain"] <= nu + 1 and not r["pattern"]
                  and not r["special_pattern"])
            return (r, "satisfies", "lattice, chain <= nu+1, no (nu+1)-pattern, "
                    "no special (nu*+1)-pattern", ok)

        _line(lines, "fixed points of a maximiser meet the four constraints", four)
    return {"schema": 1, "kind": "digraph", "parameters": params, "checks": lines,
            "ok": all(l["status"] != "fail" for l in lines)}


def verify_signed(sd: SignedDigraph, budget: int = DEFAULT_BUDGET) -> dict:
    g = sd.base
    tau, _ = min_feedback_vertex_set(g)
    tp, _ = tau_plus(sd)
    np_, _ = nu_plus(sd)
    tm, _ = tau_m(sd)
    tms, _ = tau_m_star(sd)
    lam = frustration_index(sd)
    bal = is_balanced(sd)
    lines: list = []
    params = {"n": g.n, "tau": tau, "tau_plus": tp, "nu_plus": np_, "tau_m": tm,
              "tau_m_star": tms, "frustration": lam, "balanced": bal}
    _line(lines, "nu+ <= tau+ <= tau <= tau*_m <= tau_m",
          lambda: ([np_, tp, tau, tms, tm], "nondecreasing", None,
                   np_ <= tp <= tau <= tms <= tm))
    _line(lines, "tau*_m <= tau + lambda", lambda: (tms, "<=", tau + lam, tms <= tau + lam))
    _line(lines, "balanced iff lambda = 0", lambda: ([bal], "==", [lam == 0], bal == (lam == 0)))
    try:
        phi, _ = phi_exact(sd, budget=budget)
        params["phi"] = phi
    except (BudgetExceeded, CapExceeded, ValueError) as exc:
        phi = None
        lines.append({"check": "phi exact", "status": "skipped", "error": str(exc)})
    if phi is not None:
        bound = sum_largest_binomials(tms, min(np_ + 1, tms + 1))
        _line(lines, "phi <= 2**tau+", lambda: (phi, "<=", 2 ** tp, phi <= 2 ** tp))
        _line(lines, "phi <= sum of nu+ + 1 largest C(tau*_m,k)",
              lambda: (phi, "<=", bound, phi <= bound))

        def balanced_case():
            if not bal:
                return None
            phi_m = phi_m_exact(g, budget=budget)[0]
            return phi, "==", phi_m, phi == phi_m

        _line(lines, "balanced implies phi = phi_m", balanced_case)
    return {"schema": 1, "kind": "signed", "parameters": params, "checks": lines,
            "ok": all(l["status"] != "fail" for l in lines)}


def verify_theorems(obj, budget: int = DEFAULT_BUDGET) -> dict:
    """Check every applicable bound on a digraph or a signed digraph.

    Returns a JSON-ready report; each check carries its two sides and a
    status ``pass``, ``fail``, ``n/a`` or ``skipped`` (cap or budget hit).
    """
    if isinstance(obj, SignedDigraph):
        return verify_signed(obj, budget)
    return verify_digraph(obj, budget)
