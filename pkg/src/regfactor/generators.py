"""Graph families: extremal constructions, blistering, clique-block
sharpness graphs, and random multigraphs.

The extremal builder produces (2r+1)-regular multigraphs with exactly
2r+4-3k cut-edges and no 2k-factor, for 3k <= 2r+1.  It starts from a
bipartite skeleton with parts T and R+S in which T- and S-vertices have
degree 2r+1 while the R side has 2r+4-3k degree-1 stubs and
k(|T|-|S|)-1 degree-3 stubs, then expands each R-stub into a bridgeless
component whose attachment vertex is short by exactly the stub degree.
Optionally, S-T edges are blistered and disjoint regular bridgeless
components appended; neither changes the cut-edge count or creates a
2k-factor.

Deficiency components here are the smallest convenient realization: three
vertices with parallel edges (a single vertex for the degree-3 stub when
r = 1).  Any connected bridgeless component with one vertex short by d and
the rest (2r+1)-regular would do; small ones keep the exhaustive factor
oracle within reach.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .connectivity import bridges, is_connected
from .factor import tutte_deficiency
from .multigraph import Multigraph


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of the extremal family.

    Requires 1 <= k and 3k <= 2r+1; size_t - size_s >= 1, with equality
    forced when 3k < 2r+1.  Blisters need at least one S-vertex.
    """

    r: int
    k: int
    size_t: int
    size_s: int = 0
    blister_count: int = 0
    extra_components: int = 0

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.k < 1 or 3 * self.k > 2 * self.r + 1:
            raise ValueError(f"k must satisfy 1 <= k <= (2r+1)/3, got k={self.k}, r={self.r}")
        if self.size_t < 1 or self.size_s < 0:
            raise ValueError("need size_t >= 1 and size_s >= 0")
        diff = self.size_t - self.size_s
        if diff < 1:
            raise ValueError(f"size_t - size_s must be >= 1, got {diff}")
        if 3 * self.k < 2 * self.r + 1 and diff != 1:
            raise ValueError(f"size_t - size_s must equal 1 when 3k < 2r+1, got {diff}")
        if self.blister_count < 0 or self.extra_components < 0:
            raise ValueError("blister_count and extra_components must be >= 0")
        if self.blister_count > 0 and self.size_s == 0:
            raise ValueError("blisters require at least one S-vertex (they patch S-T edges)")

    @property
    def cut_edges(self) -> int:
        return 2 * self.r + 4 - 3 * self.k

    @property
    def triple_components(self) -> int:
        return self.k * (self.size_t - self.size_s) - 1


@dataclass(frozen=True)
class BswParams:
    """Parameters of the clique-block sharpness construction: 1 <= t < r."""

    r: int
    t: int

    def __post_init__(self) -> None:
        if not 1 <= self.t < self.r:
            raise ValueError(f"need 1 <= t < r, got t={self.t}, r={self.r}")


# -- building blocks ---------------------------------------------------------


def deficiency_component(r: int, d: int) -> tuple[Multigraph, int]:
    """A connected bridgeless piece, (2r+1)-regular except one vertex short by d.

    Returns the component and its attachment vertex (degree 2r+1-d inside).
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if d == 1:
        g = Multigraph(3)
        for _ in range(r):
            g.add_edge(0, 1)
            g.add_edge(0, 2)
        for _ in range(r + 1):
            g.add_edge(1, 2)
        return g, 0
    if d == 3:
        if r == 1:
            # attachment degree 2r+1-3 = 0: the component is a lone vertex
            return Multigraph(1), 0
        g = Multigraph(3)
        for _ in range(r - 1):
            g.add_edge(0, 1)
            g.add_edge(0, 2)
        for _ in range(r + 2):
            g.add_edge(1, 2)
        return g, 0
    raise ValueError(f"deficiency must be 1 or 3, got {d}")


def _interior_block(r: int) -> tuple[Multigraph, int, int]:
    """Bridgeless block with two attachment vertices each short by 1."""
    g = Multigraph(4)
    for a in (0, 1):
        for b in (2, 3):
            for _ in range(r):
                g.add_edge(a, b)
    g.add_edge(2, 3)
    return g, 0, 1


def _append(g: Multigraph, other: Multigraph) -> int:
    """Add a disjoint copy of `other` into g; returns the vertex offset."""
    offset = g.n
    g.add_vertices(other.n)
    for _, u, v in other.edges():
        g.add_edge(u + offset, v + offset)
    return offset


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    out = g.copy()
    _append(out, h)
    return out


def blister(g: Multigraph, edge_id: int, h: Multigraph, h_edge_id: int) -> Multigraph:
    """Splice the bridgeless regular graph h into an edge of g.

    Removes the chosen edge of g and the chosen edge of h from their
    disjoint union, then joins each endpoint of the g-edge to one endpoint
    of the h-edge (paired in vertex-id order).  Both graphs must be
    (2r+1)-regular for the same r; the result is again (2r+1)-regular.
    The h-edge may be a loop only when r > 1.
    """
    dg = g.regular_degree()
    dh = h.regular_degree()
    if dg is None or dh is None or dg != dh or dg % 2 == 0 or dg < 3:
        raise ValueError(f"both graphs must be (2r+1)-regular for the same r (got {dg}, {dh})")
    r = (dg - 1) // 2
    u, v = g.edge(edge_id)
    if u == v:
        raise ValueError("cannot blister a loop of the host graph")
    x, y = h.edge(h_edge_id)
    if x == y and r == 1:
        raise ValueError("a loop patch edge requires r > 1")
    if bridges(h):
        raise ValueError("the patch graph must have no cut-edge")

    out = Multigraph(g.n + h.n)
    for eid, a, b in g.edges():
        if eid != edge_id:
            out.add_edge(a, b)
    for eid, a, b in h.edges():
        if eid != h_edge_id:
            out.add_edge(a + g.n, b + g.n)
    out.add_edge(u, x + g.n)
    out.add_edge(v, y + g.n)
    return out


# -- the extremal family ------------------------------------------------------


class _Rejected(Exception):
    pass


def _allocate(params: ExtremalParams, rot: int, concentrated: bool, segregated: bool):
    """Distribute triple-stub edges, S-edges, and pendant stubs over T.

    Returns (q3_targets, s_alloc, pendants): target t-indices for each
    triple component, the S-T multiplicity matrix, and pendant counts per
    t-vertex.  Every t ends with degree exactly 2r+1.  The triple edges
    either cycle over T (gluing the t-vertices together) or concentrate on
    the fullest t; S-edges either spread near-evenly or land on a single t.
    """
    deg = 2 * params.r + 1
    n_t = params.size_t
    caps = [deg] * n_t
    q3_targets: list[list[int]] = []
    cursor = rot % n_t
    for _ in range(params.triple_components):
        targets = []
        if concentrated:
            ti = max(range(n_t), key=lambda i: (caps[i], -i))
            for _ in range(3):
                if caps[ti] == 0:
                    ti = max(range(n_t), key=lambda i: (caps[i], -i))
                    if caps[ti] == 0:
                        raise _Rejected("no capacity for triple components")
                targets.append(ti)
                caps[ti] -= 1
        else:
            for _ in range(3):
                step = 0
                while caps[cursor % n_t] == 0:
                    cursor += 1
                    step += 1
                    if step > n_t:
                        raise _Rejected("no capacity for triple components")
                targets.append(cursor % n_t)
                caps[cursor % n_t] -= 1
                cursor += 1
        q3_targets.append(targets)

    s_alloc = [[0] * n_t for _ in range(params.size_s)]
    for si in range(params.size_s):
        if segregated:
            ti = max(range(n_t), key=lambda i: (caps[i], -i))
            if caps[ti] < deg:
                raise _Rejected("no single t-vertex can absorb a full S-vertex")
            caps[ti] -= deg
            s_alloc[si][ti] = deg
        else:
            for _ in range(deg):
                ti = max(range(n_t), key=lambda i: (caps[i], -i))
                if caps[ti] == 0:
                    raise _Rejected("capacities exhausted before S was placed")
                caps[ti] -= 1
                s_alloc[si][ti] += 1
    if sum(caps) != params.cut_edges:
        raise _Rejected("pendant count mismatch")
    return q3_targets, s_alloc, caps


def _build_extremal(params: ExtremalParams, rot: int, concentrated: bool, segregated: bool):
    r = params.r
    q3_targets, s_alloc, pendants = _allocate(params, rot, concentrated, segregated)
    n_t, n_s = params.size_t, params.size_s
    g = Multigraph(n_t + n_s)
    t_verts = tuple(range(n_t))
    s_verts = tuple(range(n_t, n_t + n_s))
    for si in range(n_s):
        for ti in range(n_t):
            for _ in range(s_alloc[si][ti]):
                g.add_edge(n_t + si, ti)
    for targets in q3_targets:
        comp, attach = deficiency_component(r, 3)
        offset = _append(g, comp)
        for ti in targets:
            g.add_edge(offset + attach, ti)
    for ti in range(n_t):
        for _ in range(pendants[ti]):
            comp, attach = deficiency_component(r, 1)
            offset = _append(g, comp)
            g.add_edge(offset + attach, ti)

    for _ in range(params.blister_count):
        cut = set(bridges(g))
        s_set, t_set = set(s_verts), set(t_verts)
        candidates = [
            eid
            for eid, u, v in g.edges()
            if eid not in cut
            and ((u in s_set and v in t_set) or (u in t_set and v in s_set))
        ]
        if not candidates:
            raise _Rejected("no blisterable S-T edge left")
        patch = complete_graph(2 * r + 2)
        g = blister(g, candidates[0], patch, 0)

    for _ in range(params.extra_components):
        g = disjoint_union(g, complete_graph(2 * r + 2))
    return g, s_verts, t_verts


def _extremal_audit(g: Multigraph, params: ExtremalParams, s_verts, t_verts) -> str | None:
    """Check the construction hit its contract; returns a defect or None."""
    deg = 2 * params.r + 1
    if g.regular_degree() != deg:
        return f"not {deg}-regular"
    found = len(bridges(g))
    if found != params.cut_edges:
        return f"expected {params.cut_edges} cut-edges, built {found}"
    slack = tutte_deficiency(g, 2 * params.k, s_verts, t_verts)
    if slack != 2:
        return f"criterion slack at the defining (S,T) is {slack}, expected 2"
    return None


def general_extremal_with_partition(
    params: ExtremalParams, seed: int = 0
) -> tuple[Multigraph, tuple[int, ...], tuple[int, ...]]:
    """Build an extremal graph and return it with its defining (S, T).

    The remaining vertices form R.  The seed rotates which t-vertices
    receive which stubs, giving structural variety across seeds.
    """
    rot = seed % params.size_t
    defects = []
    for concentrated in (False, True):
        for segregated in (False, True):
            try:
                g, s_verts, t_verts = _build_extremal(params, rot, concentrated, segregated)
            except _Rejected as exc:
                defects.append(str(exc))
                continue
            defect = _extremal_audit(g, params, s_verts, t_verts)
            if defect is None:
                return g, s_verts, t_verts
            defects.append(defect)
    raise ValueError(f"cannot realize {params}: {'; '.join(defects)}")


def general_extremal(params: ExtremalParams, seed: int = 0) -> Multigraph:
    """A (2r+1)-regular graph with exactly 2r+4-3k cut-edges and no 2k-factor."""
    g, _, _ = general_extremal_with_partition(params, seed)
    return g


def sylvester_extremal(r: int, k: int) -> Multigraph:
    """The one-hub extremal graph: a single t-vertex joined by single edges
    to 2r+4-3k pendant components and by edge triples to k-1 more."""
    return general_extremal(ExtremalParams(r, k, size_t=1, size_s=0))


def extremal_parameter_grid(
    r: int, k: int, blisters: tuple[int, ...] = (0, 1, 2), extras: tuple[int, ...] = (0, 1)
) -> list[ExtremalParams]:
    """Every parameter bundle exercised for a given (r, k)."""
    diffs = [1] if 3 * k < 2 * r + 1 else [1, 2]
    grid = []
    for diff in diffs:
        for size_s in (0, 1):
            for b in blisters if size_s else (0,):
                for x in extras:
                    grid.append(ExtremalParams(r, k, size_s + diff, size_s, b, x))
    return grid


def bridged_chain(r: int, num_bridges: int) -> Multigraph:
    """(2r+1)-regular graph with exactly `num_bridges` cut-edges on a path.

    Unlike the extremal family this graph keeps all its 2k-factors
    (k <= r): every block has an internal factor, so the bridges are
    simply never used.  Useful as a control with a prescribed cut-edge
    count.
    """
    if r < 1 or num_bridges < 1:
        raise ValueError("need r >= 1 and num_bridges >= 1")
    g = Multigraph(0)
    comp, attach = deficiency_component(r, 1)
    previous = _append(g, comp) + attach
    for i in range(num_bridges):
        if i == num_bridges - 1:
            comp, attach = deficiency_component(r, 1)
            offset = _append(g, comp)
            g.add_edge(previous, offset + attach)
        else:
            block, entry, exit_ = _interior_block(r)
            offset = _append(g, block)
            g.add_edge(previous, offset + entry)
            previous = offset + exit_
    return g


# -- clique-block sharpness construction --------------------------------------


def h_rt(r: int, t: int) -> Multigraph:
    """Complement of a (2t+1)-cycle plus r-t+1 disjoint edges, on 2r+3 vertices.

    The 2t+1 cycle vertices end with degree 2r, all others 2r+1.
    """
    if not 1 <= t < r:
        raise ValueError(f"need 1 <= t < r, got t={t}, r={r}")
    n = 2 * r + 3
    cyc = 2 * t + 1
    forbidden = {(min(i, (i + 1) % cyc), max(i, (i + 1) % cyc)) for i in range(cyc)}
    for j in range(r - t + 1):
        forbidden.add((cyc + 2 * j, cyc + 2 * j + 1))
    g = Multigraph(n)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in forbidden:
                g.add_edge(i, j)
    return g


def bsw_graph(params: BswParams) -> Multigraph:
    """Simple (2r+1)-regular, (2t+1)-connected graph with no 2k-factor for
    any k with 2k(2t+1) > 2t(2r+1).

    2r+1 copies of h_rt(r, t) plus an independent hub set of 2t+1 vertices,
    each copy joined to the hub by a perfect matching on its degree-2r
    vertices.
    """
    r, t = params.r, params.t
    block = h_rt(r, t)
    hub = 2 * t + 1
    g = Multigraph(hub)
    for _ in range(2 * r + 1):
        offset = _append(g, block)
        for j in range(hub):
            g.add_edge(j, offset + j)
    return g


# -- random and named graphs ---------------------------------------------------


def random_regular_multigraph(n: int, d: int, seed: int) -> Multigraph:
    """Uniform pairing model: d stubs per vertex, matched at random.

    Loops and parallel edges are kept; the result is d-regular for every
    seed and identical across runs with the same seed.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if (n * d) % 2 == 1:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    rng.shuffle(stubs)
    g = Multigraph(n)
    for i in range(0, len(stubs), 2):
        g.add_edge(stubs[i], stubs[i + 1])
    return g


def random_connected_regular_multigraph(n: int, d: int, seed: int, max_tries: int = 2000) -> Multigraph:
    """Resample the pairing model until the graph is connected."""
    rng = random.Random(seed)
    if n < 1 or (n * d) % 2 == 1:
        raise ValueError(f"need n >= 1 and n*d even, got n={n}, d={d}")
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        g = Multigraph(n)
        for i in range(0, len(stubs), 2):
            g.add_edge(stubs[i], stubs[i + 1])
        if is_connected(g):
            return g
    raise ValueError(f"no connected {d}-regular sample on {n} vertices after {max_tries} tries")


def random_multigraph(n: int, m: int, seed: int, allow_loops: bool = True) -> Multigraph:
    """m independent uniformly random edges (loops allowed by default)."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    rng = random.Random(seed)
    g = Multigraph(n)
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while not allow_loops and v == u:
            v = rng.randrange(n)
        g.add_edge(u, v)
    return g


def complete_graph(n: int) -> Multigraph:
    g = Multigraph(n)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j)
    return g


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    g = Multigraph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def petersen_graph() -> Multigraph:
    g = Multigraph(10)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
        g.add_edge(5 + i, 5 + (i + 2) % 5)
        g.add_edge(i, 5 + i)
    return g


def complement(g: Multigraph) -> Multigraph:
    if not g.is_simple():
        raise ValueError("complement is defined for simple graphs only")
    adj = {(u, v) for _, u, v in g.edges()}
    out = Multigraph(g.n)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if (i, j) not in adj:
                out.add_edge(i, j)
    return out


def named_graphs() -> dict:
    """Catalog of parameterized named constructions."""
    return {
        "complete": complete_graph,
        "cycle": cycle_graph,
        "petersen": petersen_graph,
    }
