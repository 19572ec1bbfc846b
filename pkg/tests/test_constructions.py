import random

import pytest

import brute
from cyclebound import (
    AcyclicError,
    Cycle,
    Digraph,
    NotSpecialError,
    Packing,
    build_family,
    build_k_star,
    fixed_points,
    interaction_graph,
    is_and_or_network,
    is_monotone,
    lower_bound_report,
    max_cycle_packing,
    max_special_packing,
    min_feedback_vertex_set,
    short_cycle_network,
    special_packing_network,
    threshold_network,
    transitive_tournament_network,
)
from cyclebound.constructions import absorbed_closure, build, threshold_layers
from cyclebound.families import nonspecial_example, random_digraph, random_symmetric

EX = nonspecial_example()


def independently_checked(c, g):
    """Re-verify a construction without the package's enumeration."""
    f = c.network
    assert is_monotone(f)
    assert interaction_graph(f) == g
    count = len(brute.fixed_states(f)) if g.n <= 12 else len(fixed_points(f))
    assert count >= c.guaranteed
    if c.fixed_points is not None:
        assert count == c.fixed_points
    return count


# -- threshold ------------------------------------------------------------

def test_threshold_single_loop():
    g = build_family("loops", 1)
    c = threshold_network(g)
    assert independently_checked(c, g) == 2
    assert sorted(fixed_points(c.network).points) == [0, 1]


def test_threshold_example_chain():
    c = threshold_network(EX)
    assert c.guaranteed == 4
    assert independently_checked(c, EX) >= 4
    xs = sorted(c.witnesses, key=int.bit_count)
    assert all(a & b == a for a, b in zip(xs, xs[1:]))


def test_threshold_k_star_3_is_optimal():
    g = build_k_star(3)
    c = threshold_network(g)
    assert independently_checked(c, g) == 4


def test_threshold_layers_partition():
    _, p = max_cycle_packing(EX)
    layers = threshold_layers(EX, p)
    union = 0
    for m in layers:
        assert not union & m
        union |= m
    assert union == EX.all_mask


def test_threshold_explicit_packing():
    p = Packing((Cycle.of(1, 2, 3), Cycle.of(4, 5)), EX)
    assert threshold_network(EX, p).guaranteed == 3


# -- special packing ------------------------------------------------------

def test_special_disjoint_cycles():
    g = Digraph(5, frozenset({(0, 1), (1, 0), (2, 2), (3, 4), (4, 3)}))
    c = special_packing_network(g)
    assert independently_checked(c, g) == 8
    assert is_and_or_network(c.network)


def test_special_example():
    p = Packing((Cycle.of(1, 2, 3), Cycle.of(4, 5)), EX)
    c = special_packing_network(EX, p)
    assert independently_checked(c, EX) >= 4
    # packing vertices compute x_pred OR (AND of the rest): monotone, not and-or
    assert is_monotone(c.network) and not is_and_or_network(c.network)


def test_special_sources_constant_zero():
    g = Digraph(3, frozenset({(0, 1), (1, 1), (1, 2), (2, 1)}))
    c = special_packing_network(g)
    assert c.network.tables[0] == 0 and c.network.inputs[0] == ()


def test_special_rejects_non_special():
    p = Packing((Cycle.of(1, 2, 3), Cycle.of(4, 5), Cycle.of(6)), EX)
    with pytest.raises(NotSpecialError):
        special_packing_network(EX, p)


def test_loop_cycle_alternating_loops_not_special():
    # the path 0 -> 1 -> 2 avoids packing vertices internally, while 2 has no
    # principal path from its own loop or from a source
    g = build_family("loop-cycle", 4)
    p = Packing((Cycle.of(0), Cycle.of(2)), g)
    with pytest.raises(NotSpecialError):
        special_packing_network(g, p)
    assert independently_checked(threshold_network(g), g) >= 4


def test_absorbed_closure():
    # 1 also reads 2, so nothing is absorbed; without 2 -> 1 the chain follows 0
    g = Digraph(3, frozenset({(0, 0), (0, 1), (1, 2), (2, 1)}))
    assert absorbed_closure(g, 0b001) == 0
    g2 = Digraph(3, frozenset({(0, 0), (0, 1), (1, 2)}))
    assert absorbed_closure(g2, 0b001) == 0b110


# -- short cycles ---------------------------------------------------------

def test_short_cycles_disjoint_loops():
    g = build_family("loops", 4)
    c = short_cycle_network(g)
    assert c.details["selected"] == [0, 1, 2, 3]
    assert independently_checked(c, g) == 16


@pytest.mark.parametrize("seed", range(8))
def test_short_cycles_matching_plus_cross_edges(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    arcs = set()
    for i in range(m):
        arcs |= {(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)}
    for _ in range(rng.randint(0, 4)):
        u, v = rng.sample(range(2 * m), 2)
        arcs |= {(u, v), (v, u)}
    g = Digraph(2 * m, frozenset(arcs))
    cycles = [Cycle.of(2 * i, 2 * i + 1) for i in range(m)]
    c = short_cycle_network(g, cycles)
    assert independently_checked(c, g) >= 2 ** -(-m // 9)


def test_short_cycles_star():
    g = build_family("star-of-2-cycles", 5)
    assert independently_checked(short_cycle_network(g), g) >= 2


# -- T'_n -----------------------------------------------------------------

@pytest.mark.parametrize("n,count", [(1, 2), (4, 9), (5, 17)])
def test_tprime_counts(n, count):
    c = transitive_tournament_network(n)
    assert c.fixed_points == count
    assert independently_checked(c, build_family("tprime", n)) == count


# -- random sweep ---------------------------------------------------------

@pytest.mark.parametrize("seed", range(40))
def test_constructions_on_random_digraphs(seed):
    rng = random.Random(2000 + seed)
    g = random_digraph(rng.randint(1, 7), 0.3, rng, max_in_degree=3)
    nu, _ = max_cycle_packing(g)
    c = threshold_network(g)
    assert independently_checked(c, g) >= nu + 1
    if nu == 0:
        return
    nu_star, _ = max_special_packing(g)
    tau, _ = min_feedback_vertex_set(g)
    s = special_packing_network(g)
    count = independently_checked(s, g)
    assert count >= 2 ** nu_star
    assert (count == 2 ** tau) == (nu_star == tau)
    independently_checked(short_cycle_network(g), g)


@pytest.mark.parametrize("seed", range(10))
def test_constructions_on_symmetric_digraphs(seed):
    rng = random.Random(seed)
    g = random_symmetric(rng.randint(2, 7), 0.4, rng)
    if max_cycle_packing(g)[0] == 0:
        return
    for kind in ("threshold", "special-packing", "short-cycles"):
        independently_checked(build(kind, g), g)


# -- report ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 7))
def test_report_tprime(n):
    r = lower_bound_report(build_family("tprime", n))
    assert r["best"] == n + 1 and r["witness"] == "threshold"


def test_report_disjoint_cycles_and_k_star():
    assert lower_bound_report(build_family("loops", 3))["best"] == 8
    assert lower_bound_report(build_k_star(4))["best"] == 5


def test_report_acyclic():
    with pytest.raises(AcyclicError):
        lower_bound_report(Digraph(2, frozenset({(0, 1)})))


def test_build_dispatch():
    assert build("tprime", build_family("tprime", 3)).fixed_points == 5
    with pytest.raises(ValueError):
        build("tprime", EX)
    with pytest.raises(ValueError):
        build("bogus", EX)
