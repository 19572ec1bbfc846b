from __future__ import annotations

from hypothesis import strategies as st

from cyclebound import Digraph


@st.composite
def digraphs(draw, max_n: int = 6, loops: bool = True, max_in_degree: int | None = None):
    n = draw(st.integers(1, max_n))
    arcs = set()
    for v in range(n):
        ins = draw(st.sets(st.integers(0, n - 1), max_size=n if max_in_degree is None
                           else max_in_degree))
        arcs |= {(u, v) for u in ins if loops or u != v}
    return Digraph(n, frozenset(arcs))
