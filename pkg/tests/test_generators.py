import pytest
from hypothesis import given
from hypothesis import strategies as st

from regfactor import (
    BswParams,
    ExtremalParams,
    Multigraph,
    blister,
    bridged_chain,
    bridges,
    bsw_graph,
    complement,
    complete_graph,
    cycle_graph,
    deficiency_component,
    disjoint_union,
    extremal_parameter_grid,
    find_factor,
    general_extremal,
    general_extremal_with_partition,
    h_rt,
    has_2k_factor,
    is_connected,
    named_graphs,
    petersen_graph,
    random_connected_regular_multigraph,
    random_regular_multigraph,
    sylvester_extremal,
    t_odd_profile,
)


# -- deficiency components ------------------------------------------------------


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [1, 3])
def test_deficiency_component_degrees(r, d):
    if d == 3 and r == 1:
        comp, attach = deficiency_component(1, 3)
        assert comp.n == 1 and comp.m == 0 and attach == 0
        return
    comp, attach = deficiency_component(r, d)
    target = 2 * r + 1
    assert comp.degree(attach) == target - d
    assert all(comp.degree(v) == target for v in range(comp.n) if v != attach)
    assert is_connected(comp)
    assert bridges(comp) == []


def test_deficiency_component_bad_params():
    with pytest.raises(ValueError):
        deficiency_component(0, 1)
    with pytest.raises(ValueError):
        deficiency_component(2, 2)


# -- one-hub extremal graphs ----------------------------------------------------


def test_sylvester_1_1():
    g = sylvester_extremal(1, 1)
    assert g.regular_degree() == 3
    assert len(bridges(g)) == 3
    assert g.degree(0) == 3  # the hub
    assert not has_2k_factor(g, 1)


@pytest.mark.parametrize(
    "r, k, expected_bridges",
    [(1, 1, 3), (2, 1, 5), (3, 2, 4), (4, 3, 3)],
)
def test_sylvester_bridge_counts(r, k, expected_bridges):
    g = sylvester_extremal(r, k)
    assert g.regular_degree() == 2 * r + 1
    assert len(bridges(g)) == expected_bridges == 2 * r + 4 - 3 * k
    prof = t_odd_profile(g, (), {0})
    assert prof.q1 == expected_bridges
    assert prof.q3 == k - 1  # the triple-attached components
    assert find_factor(g, 2 * k) is None


def test_sylvester_bad_params():
    with pytest.raises(ValueError):
        sylvester_extremal(1, 2)


# -- blistering ------------------------------------------------------------------


def test_blister_k4_by_k4():
    out = blister(complete_graph(4), 0, complete_graph(4), 0)
    assert out.n == 8
    assert out.regular_degree() == 3
    assert bridges(out) == []


def test_blister_validations():
    k4 = complete_graph(4)
    with pytest.raises(ValueError, match="regular"):
        blister(k4, 0, complete_graph(6), 0)
    path = Multigraph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError, match="regular"):
        blister(k4, 0, path, 0)
    # cubic host carrying a loop: the loop itself cannot be blistered
    looped_host = Multigraph.from_edges(2, [(0, 0), (0, 1), (1, 1)])
    with pytest.raises(ValueError, match="loop of the host"):
        blister(looped_host, 0, k4, 0)
    # bridged patch refused
    bridged_patch = Multigraph.from_edges(2, [(0, 0), (0, 1), (1, 1)])
    host = sylvester_extremal(1, 1)
    host_edge = next(eid for eid, u, v in host.edges() if u != v)
    with pytest.raises(ValueError, match="cut-edge"):
        blister(host, host_edge, bridged_patch, 1)


def test_blister_loop_patch_edge():
    # 5-regular bridgeless patch with loops: triple edge plus one loop each
    patch = Multigraph.from_edges(2, [(0, 1), (0, 1), (0, 1), (0, 0), (1, 1)])
    assert patch.regular_degree() == 5
    loop_id = 3
    host = random_connected_regular_multigraph(6, 5, seed=4)
    host_edge = next(eid for eid, u, v in host.edges() if u != v)
    out = blister(host, host_edge, patch, loop_id)
    assert out.regular_degree() == 5
    assert out.n == host.n + 2

    # in the cubic world a loop patch edge is refused outright
    cubic_patch = Multigraph.from_edges(2, [(0, 0), (0, 1), (1, 1)])
    cubic_host = sylvester_extremal(1, 1)
    cubic_edge = next(eid for eid, u, v in cubic_host.edges() if u != v)
    with pytest.raises(ValueError, match="r > 1"):
        blister(cubic_host, cubic_edge, cubic_patch, 0)


# -- general extremal family ------------------------------------------------------


def test_general_extremal_specializes_to_sylvester():
    params = ExtremalParams(1, 1, size_t=1, size_s=0)
    assert general_extremal(params) == sylvester_extremal(1, 1)


def test_general_extremal_figure1(figure1):
    g, s, t = figure1
    prof = t_odd_profile(g, s, t)
    assert (prof.q1, prof.q2, prof.q3) == (3, 1, 1)
    assert len(bridges(g)) == 3
    assert g.regular_degree() == 3
    assert is_connected(g)


def test_general_extremal_params_validation():
    with pytest.raises(ValueError):
        ExtremalParams(1, 1, size_t=0)
    with pytest.raises(ValueError):
        ExtremalParams(1, 1, size_t=1, size_s=1)
    with pytest.raises(ValueError):
        ExtremalParams(2, 1, size_t=3, size_s=1)  # diff 2 needs 3k = 2r+1
    with pytest.raises(ValueError):
        ExtremalParams(2, 2, size_t=1)  # k over (2r+1)/3
    with pytest.raises(ValueError):
        ExtremalParams(1, 1, size_t=1, size_s=0, blister_count=1)  # no S to blister


@pytest.mark.parametrize("r, k", [(1, 1), (2, 1), (3, 2), (4, 3)])
def test_general_extremal_grid_bridge_counts(r, k):
    for params in extremal_parameter_grid(r, k, blisters=(0, 1), extras=(0,)):
        g = general_extremal(params)
        assert g.regular_degree() == 2 * r + 1
        assert len(bridges(g)) == 2 * r + 4 - 3 * k


def test_general_extremal_seed_determinism():
    params = ExtremalParams(3, 2, size_t=2, size_s=1, blister_count=1)
    a = general_extremal(params, seed=1)
    b = general_extremal(params, seed=1)
    assert a == b


# -- clique-block sharpness graphs -------------------------------------------------


def test_h_rt_degrees():
    h = h_rt(2, 1)
    assert h.n == 7
    assert sorted(h.degree_sequence()) == [4, 4, 4, 5, 5, 5, 5]
    assert h.is_simple()


def test_bsw_shape():
    g = bsw_graph(BswParams(2, 1))
    assert g.n == 38
    assert g.regular_degree() == 5
    assert g.is_simple()
    big = bsw_graph(BswParams(3, 1))
    assert big.n == 66
    assert big.regular_degree() == 7


def test_bsw_bad_params():
    with pytest.raises(ValueError):
        BswParams(2, 2)
    with pytest.raises(ValueError):
        BswParams(1, 1)


# -- random multigraphs -------------------------------------------------------------


def test_pairing_model_trivial():
    g = random_regular_multigraph(2, 1, seed=0)
    assert g.m == 1 and g.edge(0) == (0, 1)


def test_pairing_model_parity_rejected():
    with pytest.raises(ValueError):
        random_regular_multigraph(3, 3, seed=0)


@given(st.integers(2, 10), st.integers(1, 6), st.integers(0, 1000))
def test_pairing_model_regular_and_deterministic(n, d, seed):
    if (n * d) % 2 == 1:
        n += 1
    g = random_regular_multigraph(n, d, seed)
    assert g.regular_degree() == d
    assert g == random_regular_multigraph(n, d, seed)


def test_connected_sampler():
    g = random_connected_regular_multigraph(8, 3, seed=11)
    assert is_connected(g)
    assert g.regular_degree() == 3
    assert g == random_connected_regular_multigraph(8, 3, seed=11)


# -- named graphs and controls --------------------------------------------------------


def test_complement_c5_is_c5(c5):
    co = complement(c5)
    assert co.regular_degree() == 2
    assert is_connected(co)
    assert co.n == 5


def test_complement_complete():
    assert complement(complete_graph(4)).m == 0


def test_complement_rejects_multigraph():
    with pytest.raises(ValueError):
        complement(Multigraph.from_edges(2, [(0, 1), (0, 1)]))


def test_named_catalog():
    catalog = named_graphs()
    assert catalog["petersen"]().regular_degree() == 3
    assert catalog["complete"](5).m == 10
    assert catalog["cycle"](6).m == 6


def test_disjoint_union():
    g = disjoint_union(complete_graph(4), cycle_graph(3))
    assert (g.n, g.m) == (7, 9)
    assert len(g.components()) == 2


def test_petersen_is_cubic():
    g = petersen_graph()
    assert g.regular_degree() == 3
    assert g.is_simple()


@pytest.mark.parametrize("r, k", [(1, 1), (2, 1), (4, 3)])
def test_bridged_chain_control(r, k):
    p = 2 * r + 4 - 3 * k
    g = bridged_chain(r, p)
    assert g.regular_degree() == 2 * r + 1
    assert len(bridges(g)) == p
    assert is_connected(g)
    assert has_2k_factor(g, k)
