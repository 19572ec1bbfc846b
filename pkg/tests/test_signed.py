import random
from itertools import combinations

import pytest

import brute
from cyclebound import (
    BooleanNetwork,
    Digraph,
    SignedDigraph,
    build_family,
    cycle_sign,
    enumerate_cycles,
    fixed_points,
    frustration_index,
    is_balanced,
    max_cycle_packing,
    min_feedback_vertex_set,
    nu_plus,
    signed_interaction_graph,
    signed_upper_bound,
    switch,
    switch_network,
    tau_m,
    tau_m_star,
    tau_plus,
)
from cyclebound.families import random_digraph
from cyclebound.poset_analysis import sum_largest_binomials
from cyclebound.signed import signed_parameters


def random_signed(rng, n, p=0.35, zero=0.1):
    g = random_digraph(n, p, rng)
    signs = {}
    for a in g.arcs:
        r = rng.random()
        signs[a] = 0 if r < zero else (1 if r < (1 + zero) / 2 else -1)
    return SignedDigraph(g, signs)


def random_network(rng, n, max_in=3):
    inputs, tables = [], []
    for _ in range(n):
        ins = tuple(rng.sample(range(n), rng.randint(0, min(n, max_in))))
        inputs.append(ins)
        tables.append(rng.randrange(1 << (1 << len(ins))))
    return BooleanNetwork(tuple(inputs), tuple(tables))


# -- brute-force references ----------------------------------------------

def b_signs_after(sd, I):
    return {(u, v): s * (-1 if ((u in I) != (v in I)) else 1) for (u, v), s in sd.signs.items()}


def b_frustration(sd):
    return min(sum(1 for s in b_signs_after(sd, set(I)).values() if s != 1)
               for r in range(sd.n + 1) for I in combinations(range(sd.n), r))


def b_cycle_sign(sd, c):
    s = 1
    for i in range(len(c)):
        s *= sd.signs[(c[i], c[(i + 1) % len(c)])]
    return s


def b_min_hitting(n, sets, forced=()):
    for r in range(n + 1):
        for S in combinations(range(n), r):
            S = set(S)
            if set(forced) <= S and all(S & set(c) for c in sets):
                return r
    raise AssertionError


def b_tau_plus(sd):
    return b_min_hitting(sd.n, [c for c in brute.cycles(sd.base) if b_cycle_sign(sd, c) >= 0])


def b_nu_plus(sd):
    good = [c for c in brute.cycles(sd.base) if b_cycle_sign(sd, c) >= 0]
    return max(len(f) for f in brute.disjoint_families(good))


def b_tau_m(sd):
    heads = {v for (u, v), s in sd.signs.items() if s != 1}
    return b_min_hitting(sd.n, brute.cycles(sd.base), heads)


def b_tau_m_star(sd):
    best = None
    for r in range(sd.n + 1):
        for I in combinations(range(sd.n), r):
            val = b_tau_m(SignedDigraph(sd.base, b_signs_after(sd, set(I))))
            best = val if best is None else min(best, val)
    return best


# -- examples -------------------------------------------------------------

def test_text_round_trip():
    sd = SignedDigraph.uniform(build_family("complete", 3), -1)
    assert SignedDigraph.from_text(sd.to_text()) == sd
    with pytest.raises(ValueError):
        SignedDigraph(Digraph(1, frozenset({(0, 0)})), {(0, 0): 2})


def test_balance_examples():
    for name, n in [("complete", 4), ("tprime", 3), ("kstar", 2)]:
        assert is_balanced(SignedDigraph.uniform(build_family(name, n), 1))
    k2 = SignedDigraph.uniform(build_family("complete", 2), -1)
    assert cycle_sign(k2, [0, 1]) == 1
    assert is_balanced(k2)
    assert switch(k2, [0]) == SignedDigraph.uniform(k2.base, 1)
    k3 = SignedDigraph.uniform(build_family("complete", 3), -1)
    assert cycle_sign(k3, [0, 1, 2]) == -1
    assert not is_balanced(k3)


def test_frustration_examples():
    assert frustration_index(SignedDigraph.uniform(build_family("complete", 4), 1)) == 0
    # every arc of (K_3, -) counts; a switch fixes four of the six
    assert frustration_index(SignedDigraph.uniform(build_family("complete", 3), -1)) == 2
    g = build_family("cycle", 3)
    sd = SignedDigraph(g, {a: (0 if a == (0, 1) else 1) for a in g.arcs})
    assert frustration_index(sd) == 1


def test_switch_identity_sets():
    rng = random.Random(1)
    sd = random_signed(rng, 5)
    assert switch(sd, []) == sd
    assert switch(sd, range(5)) == sd


def test_k_nn_switch():
    for n in (2, 3):
        g = build_family("complete-bipartite", n)
        neg = SignedDigraph.uniform(g, -1)
        assert switch(neg, range(n)) == SignedDigraph.uniform(g, 1)
        assert tau_m(neg)[0] == 2 * n
        assert tau_m_star(neg)[0] == n == min_feedback_vertex_set(g)[0]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complete_negative(n):
    sd = SignedDigraph.uniform(build_family("complete", n), -1)
    assert tau_plus(sd)[0] == n - 1
    assert nu_plus(sd)[0] == n // 2
    assert tau_m_star(sd)[0] == n - 1
    assert tau_m(sd)[0] == n


def test_signed_upper_bound_examples():
    assert signed_upper_bound(SignedDigraph.uniform(build_family("complete", 3), -1)) == 3
    assert signed_upper_bound(SignedDigraph.uniform(build_family("complete", 4), -1)) == 7


def test_negative_odd_cycle():
    sd = SignedDigraph.uniform(build_family("cycle", 3), -1)
    assert tau_plus(sd)[0] == 0 and nu_plus(sd)[0] == 0


@pytest.mark.parametrize("seed", range(15))
def test_positive_matches_unsigned(seed):
    rng = random.Random(seed)
    g = random_digraph(rng.randint(1, 6), 0.35, rng)
    sd = SignedDigraph.uniform(g, 1)
    tau = min_feedback_vertex_set(g)[0]
    nu = max_cycle_packing(g)[0]
    assert tau_plus(sd)[0] == tau_m(sd)[0] == tau_m_star(sd)[0] == tau
    assert nu_plus(sd)[0] == nu
    assert signed_upper_bound(sd) == min(2 ** tau, sum_largest_binomials(tau, min(nu + 1, tau + 1)))


# -- properties -----------------------------------------------------------

@pytest.mark.parametrize("seed", range(60))
def test_switch_involution_and_invariants(seed):
    rng = random.Random(100 + seed)
    sd = random_signed(rng, rng.randint(1, 8))
    I = [v for v in range(sd.n) if rng.random() < 0.5]
    sw = switch(sd, I)
    assert switch(sw, I) == sd
    for c in enumerate_cycles(sd.base):
        assert cycle_sign(sw, c) == cycle_sign(sd, c)
    if sd.n <= 6:
        assert tau_plus(sw)[0] == tau_plus(sd)[0]
        assert nu_plus(sw)[0] == nu_plus(sd)[0]
        assert frustration_index(sw) == frustration_index(sd)


@pytest.mark.parametrize("seed", range(60))
def test_parameters_match_brute_force(seed):
    rng = random.Random(300 + seed)
    sd = random_signed(rng, rng.randint(1, 5))
    assert frustration_index(sd) == b_frustration(sd)
    assert is_balanced(sd) == (b_frustration(sd) == 0)
    assert tau_plus(sd)[0] == b_tau_plus(sd)
    assert nu_plus(sd)[0] == b_nu_plus(sd)
    assert tau_m(sd)[0] == b_tau_m(sd)
    assert tau_m_star(sd)[0] == b_tau_m_star(sd)


@pytest.mark.parametrize("seed", range(60))
def test_parameter_chain(seed):
    rng = random.Random(600 + seed)
    sd = random_signed(rng, rng.randint(1, 7))
    p = signed_parameters(sd)
    tau = min_feedback_vertex_set(sd.base)[0]
    assert p["nu_plus"] <= p["tau_plus"] <= tau <= p["tau_m_star"] <= p["tau_m"]
    assert p["tau_m_star"] <= tau + p["frustration"]
    assert p["balanced"] == (p["frustration"] == 0)


@pytest.mark.parametrize("seed", range(60))
def test_switch_network(seed):
    rng = random.Random(900 + seed)
    n = rng.randint(1, 6)
    f = random_network(rng, n)
    I = [v for v in range(n) if rng.random() < 0.5]
    fi = switch_network(f, I)
    m = sum(1 << v for v in I)
    P, Q = fixed_points(f), fixed_points(fi)
    assert len(P) == len(Q)
    assert {x ^ m for x in P.points} == set(Q.points)
    assert signed_interaction_graph(fi) == switch(signed_interaction_graph(f), I)


def test_switch_network_trivial_sets():
    f = random_network(random.Random(5), 4)
    assert switch_network(f, []) == f
    ident = BooleanNetwork.identity(3)
    assert set(signed_interaction_graph(switch_network(ident, range(3))).signs.values()) == {1}


@pytest.mark.parametrize("seed", range(40))
def test_random_network_within_signed_bounds(seed):
    rng = random.Random(1200 + seed)
    f = random_network(rng, rng.randint(1, 6))
    sd = signed_interaction_graph(f)
    count = len(fixed_points(f))
    assert count <= signed_upper_bound(sd)
    assert count <= 2 ** tau_plus(sd)[0]
