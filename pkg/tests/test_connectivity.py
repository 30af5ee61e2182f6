import pytest
from hypothesis import given

from regfactor import (
    Multigraph,
    blister,
    bridges,
    bsw_graph,
    BswParams,
    complete_graph,
    cycle_graph,
    edge_connectivity,
    is_connected,
    petersen_graph,
    sylvester_extremal,
    vertex_connectivity,
)

from helpers import multigraphs, naive_bridges, simple_graphs


def test_bridges_trivial(k4):
    assert bridges(k4) == []
    path = Multigraph.from_edges(3, [(0, 1), (1, 2)])
    assert bridges(path) == [0, 1]


def test_bridges_sylvester():
    assert len(bridges(sylvester_extremal(1, 1))) == 3


@given(multigraphs(max_n=7, max_m=14))
def test_bridges_match_naive_oracle(g):
    assert bridges(g) == sorted(naive_bridges(g))


@given(multigraphs())
def test_no_loop_and_no_parallel_bridge(g):
    cut = set(bridges(g))
    pair_counts: dict[tuple[int, int], int] = {}
    for _, u, v in g.edges():
        pair_counts[(u, v)] = pair_counts.get((u, v), 0) + 1
    for eid in cut:
        u, v = g.edge(eid)
        assert u != v
        assert pair_counts[(u, v)] == 1


@given(multigraphs(max_n=7, max_m=12))
def test_bridge_removal_splits_exactly_once(g):
    base = len(g.components())
    for eid in bridges(g):
        h = g.copy()
        h.remove_edge(eid)
        assert len(h.components()) == base + 1


def test_is_connected(k4):
    assert is_connected(k4)
    assert not is_connected(Multigraph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Multigraph(0))
    assert is_connected(bsw_graph(BswParams(2, 1)))


def test_edge_connectivity_small(k4, c5):
    tree = Multigraph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert edge_connectivity(tree) == 1
    assert edge_connectivity(k4) == 3
    assert edge_connectivity(c5) == 2
    with pytest.raises(ValueError):
        edge_connectivity(Multigraph(1))


def test_edge_connectivity_counts_parallels():
    g = Multigraph.from_edges(2, [(0, 1), (0, 1), (0, 1)])
    assert edge_connectivity(g) == 3


def test_vertex_connectivity_small(k4, c5):
    assert vertex_connectivity(k4) == 3
    assert vertex_connectivity(c5) == 2
    assert vertex_connectivity(petersen_graph()) == 3
    with pytest.raises(ValueError):
        vertex_connectivity(Multigraph.from_edges(2, [(0, 0), (0, 1), (0, 1)]))


def test_vertex_connectivity_bsw():
    assert vertex_connectivity(bsw_graph(BswParams(2, 1))) >= 3


@given(simple_graphs(max_n=7))
def test_connectivity_chain(g):
    if g.n < 2:
        return
    lam = edge_connectivity(g)
    assert (lam >= 1) == is_connected(g)
    assert lam <= min(g.degree(v) for v in range(g.n))
    assert vertex_connectivity(g) <= lam


def test_blister_keeps_bridge_count_on_non_bridge(k4):
    host = complete_graph(4)
    out = blister(host, 0, complete_graph(4), 0)
    assert out.n == 8
    assert out.regular_degree() == 3
    assert bridges(out) == []


def test_blister_on_bridge_adds_exactly_one():
    g = sylvester_extremal(1, 1)
    cut = bridges(g)
    out = blister(g, cut[0], complete_graph(4), 0)
    assert len(bridges(out)) == len(cut) + 1
    assert out.regular_degree() == 3
