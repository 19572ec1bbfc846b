import random
from itertools import combinations

import pytest

import brute
from cyclebound import Digraph, build_family, dominating_selection, min_dominating_set
from cyclebound.domination import selection_holds
from cyclebound.families import random_digraph


def _dominates(g, d):
    return all(v in d or any((u, v) in g.arcs for u in d) for v in range(g.n))


def _brute_domination(g):
    for size in range(g.n + 1):
        for d in combinations(range(g.n), size):
            if _dominates(g, set(d)):
                return size
    raise AssertionError


def test_three_cycle_needs_two():
    assert min_dominating_set(build_family("cycle", 3))[0] == 2


def test_universal_vertex():
    g = Digraph(5, frozenset((0, v) for v in range(1, 5)))
    assert min_dominating_set(g) == (1, [0])


@pytest.mark.parametrize("seed", range(40))
def test_domination_bound(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 10)
    g = random_digraph(n, 0.3, rng, loops=False)
    # every vertex needs an in-neighbor for the two-thirds bound
    arcs = set(g.arcs)
    for v in range(n):
        if n > 1 and not any(w == v for _, w in arcs):
            arcs.add(((v + 1) % n, v))
    g = Digraph(n, frozenset(arcs))
    if n == 1:
        return
    size, d = min_dominating_set(g)
    assert size == _brute_domination(g)
    assert _dominates(g, set(d))
    assert 3 * size <= 2 * n + 2  # size <= ceil(2n/3)


def test_single_part():
    g = build_family("cycle", 3)
    assert dominating_selection(g, [[0, 1, 2]], [[0]]) == [0]


def test_disjoint_cycles_all_selected():
    g = build_family("loops", 4)
    parts = [[v] for v in range(4)]
    assert dominating_selection(g, parts, parts) == [0, 1, 2, 3]


def test_rejects_bad_parts():
    g = build_family("loops", 3)
    with pytest.raises(ValueError):
        dominating_selection(g, [[0, 1], [1, 2]], [[0], [1]])
    with pytest.raises(ValueError):
        dominating_selection(g, [[0], [1]], [[0], []])
    with pytest.raises(ValueError):
        dominating_selection(g, [[0], [1]], [[0], [2]])


def independent_conditions_hold(g, parts, marked, selected):
    union = {v for p in parts for v in p}
    outside = union - {v for i in selected for v in parts[i]}
    for i in selected:
        for u in marked[i]:
            starts = brute.all_paths_avoiding(g, u, union)
            if starts & outside:
                continue
            if starts & (union - set(parts[i])):
                return False
    return True


def random_instance(rng):
    k = rng.randint(1, 6)
    ell = rng.randint(1, 2)
    n = rng.randint(k * ell, min(12, k * ell + 4))
    g = random_digraph(n, rng.uniform(0.1, 0.4), rng, loops=True)
    verts = list(range(n))
    rng.shuffle(verts)
    parts, marked = [], []
    for i in range(k):
        size = ell if i < k - 1 else ell + (n - k * ell) // 2
        part = sorted(verts[:size])
        del verts[:size]
        parts.append(part)
        marked.append(sorted(rng.sample(part, rng.randint(1, min(ell, len(part))))))
    return g, parts, marked


@pytest.mark.parametrize("seed", range(60))
def test_selection_random(seed):
    rng = random.Random(1000 + seed)
    g, parts, marked = random_instance(rng)
    sel = dominating_selection(g, parts, marked)
    ell = max(len(m) for m in marked)
    assert len(sel) * 3 ** ell >= len(parts)
    assert selection_holds(g, parts, marked, sel)
    assert independent_conditions_hold(g, parts, marked, sel)
