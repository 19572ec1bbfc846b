import random

import networkx as nx
import pytest

import brute
from cyclebound import (
    BudgetExceeded,
    CapExceeded,
    Digraph,
    SignedDigraph,
    build_family,
    build_k_star,
    enumerate_monotone_functions,
    fixed_points,
    interaction_graph,
    is_monotone,
    max_cycle_packing,
    max_special_packing,
    min_feedback_vertex_set,
    phi_exact,
    phi_m_exact,
    signed_interaction_graph,
    verify_theorems,
)
from cyclebound.boolean_network import and_table, or_table
from cyclebound.families import random_digraph
from cyclebound.oracle import (
    fixed_point_constraints,
    functions_with_signs,
    random_monotone_network,
    small_digraph_corpus,
)


def _monotone_by_filter(d):
    return [t for t in range(1 << (1 << d)) if brute.is_monotone_table(t, d)]


# -- function enumeration -------------------------------------------------

def test_dedekind_counts():
    assert [len(enumerate_monotone_functions(d)) for d in range(6)] == [2, 3, 6, 20, 168, 7581]


@pytest.mark.parametrize("d", range(5))
def test_monotone_enumeration_matches_filter(d):
    assert sorted(enumerate_monotone_functions(d)) == _monotone_by_filter(d)


@pytest.mark.parametrize("d", range(5))
def test_essential_enumeration_matches_filter(d):
    assert sorted(enumerate_monotone_functions(d, True)) == brute.essential_monotone_tables(d)


def test_essential_binary_functions_are_and_or():
    assert sorted(enumerate_monotone_functions(2, True)) == sorted([and_table(2), or_table(2)])
    assert [len(enumerate_monotone_functions(d, True)) for d in range(6)] == [2, 1, 2, 9, 114, 6894]


def test_functions_with_signs():
    # one negative input: only NOT; one 0-signed input: nothing of arity 1
    assert functions_with_signs([-1]) == [0b01]
    assert functions_with_signs([0]) == []
    xor = 0b0110
    assert xor in functions_with_signs([0, 0])
    assert sorted(functions_with_signs([1, 1])) == sorted([and_table(2), or_table(2)])


# -- exact values ---------------------------------------------------------

def test_phi_m_examples():
    assert phi_m_exact(build_family("loops", 1))[0] == 2
    assert phi_m_exact(build_k_star(3))[0] == 4
    assert phi_m_exact(build_family("tprime", 3))[0] == 5
    assert phi_m_exact(build_family("loops", 2))[0] == 4
    assert phi_m_exact(build_k_star(4))[0] == 5


def test_phi_m_witness_realises_graph():
    g = build_k_star(3)
    value, f = phi_m_exact(g)
    assert is_monotone(f) and interaction_graph(f) == g
    assert len(fixed_points(f)) == value


def test_phi_m_matches_reference_on_small_corpus():
    corpus = [g for g in small_digraph_corpus(3) if g.max_in_degree() <= 2]
    assert len(corpus) > 50
    for g in corpus:
        assert phi_m_exact(g)[0] == brute.phi_m(g), g


def test_phi_signed_examples():
    k3 = SignedDigraph.uniform(build_family("complete", 3), -1)
    value, f = phi_exact(k3)
    assert value == 3
    assert signed_interaction_graph(f) == k3
    k4 = SignedDigraph.uniform(build_family("complete", 4), -1)
    assert phi_exact(k4)[0] == 6


@pytest.mark.parametrize("seed", range(12))
def test_positive_signs_give_phi_m(seed):
    rng = random.Random(seed)
    g = random_digraph(rng.randint(1, 4), 0.4, rng, max_in_degree=3)
    assert phi_exact(SignedDigraph.uniform(g, 1))[0] == phi_m_exact(g)[0]


def test_balanced_switch_gives_phi_m():
    g = build_family("complete", 3)
    sd = SignedDigraph(g, {(u, v): (-1 if (u == 0) != (v == 0) else 1) for u, v in g.arcs})
    assert phi_exact(sd)[0] == phi_m_exact(g)[0]


def test_oracle_limits():
    with pytest.raises(CapExceeded):
        phi_m_exact(build_k_star(4), cap=15)
    with pytest.raises(BudgetExceeded):
        phi_m_exact(build_family("complete", 4), budget=10)
    g = Digraph(7, frozenset((u, 0) for u in range(1, 7)) | {(0, 0)})
    with pytest.raises(ValueError):
        phi_m_exact(g)


# -- corpus ---------------------------------------------------------------

def test_corpus_sizes():
    # isomorphism classes of digraphs with loops and in-degree <= 3
    sizes = [sum(1 for g in small_digraph_corpus(n) if g.n == n) for n in range(1, 4)]
    assert sizes == [2, 10, 104]


def test_corpus_is_up_to_isomorphism():
    corpus = small_digraph_corpus(3)
    for i, g in enumerate(corpus):
        for h in corpus[i + 1:]:
            if g.n == h.n and len(g.arcs) == len(h.arcs):
                assert not nx.is_isomorphic(brute.to_nx(g), brute.to_nx(h))


# -- reports --------------------------------------------------------------

def test_verify_k_star_3():
    r = verify_theorems(build_k_star(3))
    assert r["ok"]
    line = next(c for c in r["checks"] if c["check"] == "phi_m = 2**tau iff nu* = tau")
    assert line["status"] == "pass" and line["rhs"] == [False]


def test_verify_two_loops():
    r = verify_theorems(build_family("loops", 2))
    assert r["ok"] and r["parameters"]["phi_m"] == 4
    assert r["parameters"]["nu_star"] == r["parameters"]["tau"] == 2


def test_verify_signed():
    r = verify_theorems(SignedDigraph.uniform(build_family("complete", 3), -1))
    assert r["ok"] and r["parameters"]["phi"] == 3


@pytest.mark.parametrize("seed", range(25))
def test_verify_random(seed):
    rng = random.Random(seed)
    g = random_digraph(rng.randint(1, 5), 0.35, rng, max_in_degree=3)
    r = verify_theorems(g)
    assert r["ok"], [c for c in r["checks"] if c["status"] == "fail"]


@pytest.mark.parametrize("seed", range(20))
def test_four_constraints_random(seed):
    rng = random.Random(50 + seed)
    g = random_digraph(rng.randint(1, 6), 0.35, rng, max_in_degree=3)
    f = random_monotone_network(g, rng)
    _, fvs = min_feedback_vertex_set(g)
    nu, _ = max_cycle_packing(g)
    nu_star, _ = max_special_packing(g)
    r = fixed_point_constraints(f, fvs, nu, nu_star)
    assert r["lattice"] and r["chain"] <= nu + 1
    assert not r["pattern"] and not r["special_pattern"]
