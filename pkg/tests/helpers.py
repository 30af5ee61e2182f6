"""Shared strategies and independent reference oracles for the test suite.

The oracles here are deliberately naive (full rescans, exponential
enumeration) so they stay independent of the library code paths they
check.
"""

from __future__ import annotations

from hypothesis import strategies as st

from regfactor import Multigraph


@st.composite
def multigraphs(draw, max_n: int = 8, max_m: int = 16, allow_loops: bool = True):
    n = draw(st.integers(min_value=1, max_value=max_n))
    if allow_loops:
        endpoint_pairs = st.tuples(
            st.integers(0, n - 1), st.integers(0, n - 1)
        )
    else:
        endpoint_pairs = st.tuples(
            st.integers(0, n - 1), st.integers(0, n - 1)
        ).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(endpoint_pairs, max_size=max_m))
    return Multigraph.from_edges(n, edges)


@st.composite
def simple_graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Multigraph.from_edges(n, chosen)


@st.composite
def vertex_subsets(draw, g: Multigraph):
    return set(draw(st.lists(st.integers(0, g.n - 1), unique=True, max_size=g.n)))


@st.composite
def disjoint_pairs(draw, max_n: int = 8, max_m: int = 16):
    g = draw(multigraphs(max_n=max_n, max_m=max_m))
    roles = draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    s = {v for v, role in enumerate(roles) if role == 1}
    t = {v for v, role in enumerate(roles) if role == 2}
    return g, s, t


def naive_bridges(g: Multigraph) -> list[int]:
    """Remove each edge in turn and recount components."""
    base = len(g.components())
    out = []
    for eid, u, v in g.edges():
        if u == v:
            continue
        h = g.copy()
        h.remove_edge(eid)
        if len(h.components()) > base:
            out.append(eid)
    return out


def brute_max_matching_size(g: Multigraph) -> int:
    """Exponential search over non-loop edge subsets."""
    edges = [(u, v) for _, u, v in g.edges() if u != v]
    best = 0

    def rec(i: int, used: set[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        if i == len(edges) or size + (len(edges) - i) <= best:
            return
        rec(i + 1, used, size)
        u, v = edges[i]
        if u not in used and v not in used:
            used |= {u, v}
            rec(i + 1, used, size + 1)
            used -= {u, v}

    rec(0, set(), 0)
    return best


def factor_degrees(g: Multigraph, edge_ids) -> list[int]:
    deg = [0] * g.n
    for eid in edge_ids:
        u, v = g.edge(eid)
        deg[u] += 1
        deg[v] += 1
    return deg
