"""Desk-scale verification of the factor guarantees and the extremal
characterization.

Three claims are checked computationally, instance by instance:

* guarantee — every (2r+1)-regular multigraph with at most 2r-3(k-1)
  cut-edges has a 2k-factor (for 3k <= 2r+1);
* characterization — a (2r+1)-regular graph with exactly 2r+4-3k
  cut-edges has no 2k-factor iff its vertices partition into R, S, T
  satisfying the six structural conditions (a)-(f) below, and in that case
  five counting equalities hold at (S, T);
* sharpness — the clique-block construction is (2t+1)-connected,
  (2r+1)-regular, and loses its 2k-factors exactly when
  2k(2t+1) > 2t(2r+1).

Conditions (a)-(f) for a partition R, S, T of V(G):
  (a) S and T are independent sets with |T| > |S|;
  (b) all cut-edges join T to distinct components of G[R];
  (c) all edges at S lead to T, possibly through a patch component of
      G[R] sending exactly one edge to S and one to T;
  (d) exactly k(|T|-|S|)-1 components of G[R] send exactly three edges
      to T;
  (e) every remaining component of G[R] is a full (2r+1)-regular
      bridgeless component;
  (f) if 3k < 2r+1 then |T|-|S| = 1.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from typing import Iterator

from .connectivity import bridges, vertex_connectivity
from .factor import (
    exhaustive_tutte_oracle,
    find_factor,
    q_count,
    t_odd_profile,
    FactorResult,
    TutteWitness,
)
from .generators import (
    BswParams,
    ExtremalParams,
    bridged_chain,
    bsw_graph,
    extremal_parameter_grid,
    general_extremal_with_partition,
    random_connected_regular_multigraph,
    random_multigraph,
    random_regular_multigraph,
)
from .multigraph import Multigraph

CONDITION_KEYS = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True)
class PartitionCertificate:
    """An (R, S, T) partition with per-condition verdicts and the equality ledger."""

    R: tuple[int, ...]
    S: tuple[int, ...]
    T: tuple[int, ...]
    conditions: dict | None = None
    equalities: tuple[bool, bool, bool, bool, bool] | None = None

    @property
    def all_conditions_hold(self) -> bool:
        return self.conditions is not None and all(self.conditions.values())

    @property
    def all_equalities_hold(self) -> bool:
        return self.equalities is not None and all(self.equalities)

    def to_json(self) -> dict:
        out: dict = {"R": list(self.R), "S": list(self.S), "T": list(self.T)}
        if self.conditions is not None:
            out["conditions"] = dict(self.conditions)
        if self.equalities is not None:
            out["equalities"] = list(self.equalities)
        return out


@dataclass
class VerificationReport:
    """One instance-level verdict, serializable as a JSON object."""

    instance: str
    r: int
    k: int
    p: int
    hypothesis_met: bool
    factor_found: bool
    passed: bool
    millis: float
    witness: TutteWitness | None = None
    certificate: PartitionCertificate | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "instance": self.instance,
            "r": self.r,
            "k": self.k,
            "p": self.p,
            "hypothesisMet": self.hypothesis_met,
            "factorFound": self.factor_found,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.details:
            out["details"] = self.details
        out["pass"] = self.passed
        out["millis"] = self.millis
        return out


def _partition_sets(g: Multigraph, cert: PartitionCertificate):
    rs, ss, ts = set(cert.R), set(cert.S), set(cert.T)
    if rs & ss or rs & ts or ss & ts or (rs | ss | ts) != set(range(g.n)):
        raise ValueError("R, S, T must partition the vertex set")
    return rs, ss, ts


def check_conditions_a_f(g: Multigraph, r: int, k: int, cert: PartitionCertificate) -> PartitionCertificate:
    """Evaluate conditions (a)-(f) literally and fill the verdicts."""
    r_set, s_set, t_set = _partition_sets(g, cert)
    deg = 2 * r + 1
    cut = bridges(g)
    comps = g.components(exclude=s_set | t_set)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    to_t = [g.cross_edge_count(set(c), t_set) for c in comps]
    to_s = [g.cross_edge_count(set(c), s_set) for c in comps]

    cond_a = (
        g.induced_edge_count(s_set) == 0
        and g.induced_edge_count(t_set) == 0
        and len(t_set) > len(s_set)
    )

    cond_b = True
    bridge_comps = []
    for eid in cut:
        u, v = g.edge(eid)
        in_t = [x for x in (u, v) if x in t_set]
        in_r = [x for x in (u, v) if x in r_set]
        if len(in_t) != 1 or len(in_r) != 1:
            cond_b = False
            break
        bridge_comps.append(comp_of[in_r[0]])
    cond_b = cond_b and len(set(bridge_comps)) == len(bridge_comps)

    patch_like = {ci for ci in range(len(comps)) if to_s[ci] == 1 and to_t[ci] == 1}
    cond_c = True
    for s in s_set:
        for eid in g.incident(s):
            u, v = g.edge(eid)
            other = v if u == s else u
            if other in t_set:
                continue
            if other not in r_set or comp_of[other] not in patch_like:
                cond_c = False
                break
        if not cond_c:
            break

    cond_d = sum(1 for x in to_t if x == 3) == k * (len(t_set) - len(s_set)) - 1

    referenced = set(bridge_comps) | patch_like | {ci for ci in range(len(comps)) if to_t[ci] == 3}
    cond_e = True
    for ci, comp in enumerate(comps):
        if ci in referenced:
            continue
        if to_t[ci] or to_s[ci]:
            cond_e = False
            break
        if any(g.degree(v) != deg for v in comp):
            cond_e = False
            break
        cset = set(comp)
        if any(g.edge(eid)[0] in cset for eid in cut):
            cond_e = False
            break

    cond_f = 3 * k == 2 * r + 1 or len(t_set) - len(s_set) == 1

    return replace(
        cert,
        conditions={
            "a": cond_a,
            "b": cond_b,
            "c": cond_c,
            "d": cond_d,
            "e": cond_e,
            "f": cond_f,
        },
    )


def check_extremal_equalities(g, k, s, t) -> tuple[bool, bool, bool, bool, bool]:
    """The five counting equalities that hold with the defining (S, T) of an
    extremal graph: q1 = p, q2 = cross(R,S), q1+q2+3q3 = d_{G-S}(T),
    (2r+1)|S| = cross(T,S)+cross(R,S), and the |T|-|S| size rule."""
    deg = g.regular_degree()
    if deg is None or deg % 2 == 0 or deg < 3:
        raise ValueError("equality ledger requires a (2r+1)-regular graph")
    s_set, t_set = set(s), set(t)
    if s_set & t_set:
        raise ValueError(f"vertex sets overlap: {sorted(s_set & t_set)}")
    r_set = set(range(g.n)) - s_set - t_set
    profile = t_odd_profile(g, s_set, t_set)
    p = len(bridges(g))
    rs = g.cross_edge_count(r_set, s_set)
    ts = g.cross_edge_count(t_set, s_set)
    d = g.degree_sum_minus(s_set, t_set)
    diff = len(t_set) - len(s_set)
    return (
        profile.q1 == p,
        profile.q2 == rs,
        profile.q1 + profile.q2 + 3 * profile.q3 == d,
        deg * len(s_set) == ts + rs,
        diff >= 1 and (3 * k == deg or diff == 1),
    )


def _pendant_analysis(g: Multigraph, cut: list[int]):
    """Orient each bridge: its pendant side is the side containing no other
    bridge.  Returns (anchor T-vertices, pendant vertices) or None when some
    bridge cannot be oriented."""
    bridge_pairs = [g.edge(eid) for eid in cut]
    anchors: set[int] = set()
    pendant: set[int] = set()

    def side(eid: int, start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for fid in g.incident(v):
                if fid == eid:
                    continue
                a, b = g.edge(fid)
                w = b if a == v else a
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    for eid in cut:
        u, v = g.edge(eid)
        side_u = side(eid, u)
        u_holds = any(
            other != eid and a in side_u and b in side_u
            for other, (a, b) in zip(cut, bridge_pairs)
        )
        side_v = side(eid, v)
        v_holds = any(
            other != eid and a in side_v and b in side_v
            for other, (a, b) in zip(cut, bridge_pairs)
        )
        if u_holds and not v_holds:
            anchors.add(u)
            pendant |= side_v
        elif v_holds and not u_holds:
            anchors.add(v)
            pendant |= side_u
        else:
            return None
    if anchors & pendant:
        return None
    return anchors, pendant


def _candidate_partitions(g: Multigraph, r: int, k: int, oracle_cap: int, assign_budget: int):
    """Candidate (S, T) pairs for the certificate search, best guesses first."""
    if g.n <= oracle_cap:
        witness = exhaustive_tutte_oracle(g, 2 * k, cap=oracle_cap)
        if witness is not None:
            yield set(witness.S), set(witness.T)

    cut = bridges(g)
    oriented = _pendant_analysis(g, cut)
    if oriented is None:
        return
    anchors, pendant = oriented
    adj: list[set[int]] = [set() for _ in range(g.n)]
    looped = [False] * g.n
    for _, u, v in g.edges():
        if u == v:
            looped[u] = True
        else:
            adj[u].add(v)
            adj[v].add(u)

    undecided = set(range(g.n)) - anchors - pendant
    # whole components untouched by bridges and anchors are plain R
    for comp in g.components():
        cs = set(comp)
        if cs <= undecided:
            undecided -= cs
    free = sorted(v for v in undecided if not looped[v])

    yield set(), set(anchors)

    budget = assign_budget

    def assign(i: int, s_acc: list[int], t_acc: list[int]) -> Iterator[tuple[set, set]]:
        nonlocal budget
        if budget <= 0:
            return
        if i == len(free):
            budget -= 1
            if s_acc or t_acc:
                yield set(s_acc), anchors | set(t_acc)
            return
        v = free[i]
        yield from assign(i + 1, s_acc, t_acc)  # v stays in R
        if not any(u in adj[v] for u in s_acc):
            s_acc.append(v)
            yield from assign(i + 1, s_acc, t_acc)
            s_acc.pop()
        if not (adj[v] & anchors) and not any(u in adj[v] for u in t_acc):
            t_acc.append(v)
            yield from assign(i + 1, s_acc, t_acc)
            t_acc.pop()

    yield from assign(0, [], [])


def characterization_check(
    g: Multigraph,
    r: int,
    k: int,
    oracle_cap: int = 14,
    assign_budget: int = 500_000,
) -> PartitionCertificate | None:
    """Both directions of the extremal characterization on one graph.

    Requires exactly 2r+4-3k cut-edges.  Returns None when the graph has a
    2k-factor; otherwise searches for a partition passing (a)-(f), seeded
    by maximum-deficiency criterion witnesses and by the bridge structure,
    and returns it with the equality ledger attached.
    """
    deg = 2 * r + 1
    if g.regular_degree() != deg:
        raise ValueError(f"characterization applies to {deg}-regular graphs")
    expected = 2 * r + 4 - 3 * k
    cut = bridges(g)
    if len(cut) != expected:
        raise ValueError(f"expected exactly {expected} cut-edges, found {len(cut)}")
    if find_factor(g, 2 * k) is not None:
        return None

    tried = set()
    for s_set, t_set in _candidate_partitions(g, r, k, oracle_cap, assign_budget):
        key = (tuple(sorted(s_set)), tuple(sorted(t_set)))
        if key in tried:
            continue
        tried.add(key)
        r_tuple = tuple(sorted(set(range(g.n)) - s_set - t_set))
        cert = PartitionCertificate(r_tuple, key[0], key[1])
        cert = check_conditions_a_f(g, r, k, cert)
        if cert.all_conditions_hold:
            return replace(cert, equalities=check_extremal_equalities(g, k, s_set, t_set))
    raise ValueError(
        "graph has no 2k-factor but no certificate partition was found "
        f"within the search budget (tried {len(tried)} candidates)"
    )


# -- single-instance verifications ---------------------------------------------


def verify_main_theorem(g: Multigraph, r: int, k: int, instance: str = "") -> VerificationReport:
    """Check the cut-edge guarantee on one (2r+1)-regular multigraph.

    When the graph has at most 2r-3(k-1) cut-edges the report passes iff a
    2k-factor is found; with more cut-edges no claim is made and the report
    passes vacuously, marked hypothesis_met=False.
    """
    deg = 2 * r + 1
    if g.regular_degree() != deg:
        raise ValueError(f"graph is not {deg}-regular")
    if k < 1 or 3 * k > 2 * r + 1:
        raise ValueError(f"k must satisfy 1 <= k <= (2r+1)/3, got k={k}")
    start = time.perf_counter()
    p = len(bridges(g))
    hypothesis = p <= 2 * r - 3 * (k - 1)
    factor = find_factor(g, 2 * k) if hypothesis else None
    passed = (not hypothesis) or factor is not None
    witness = None
    if hypothesis and factor is None and g.n <= 14:
        witness = exhaustive_tutte_oracle(g, 2 * k)
    millis = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        instance=instance or f"main-r{r}-k{k}-n{g.n}",
        r=r,
        k=k,
        p=p,
        hypothesis_met=hypothesis,
        factor_found=factor is not None,
        passed=passed,
        millis=millis,
        witness=witness,
        details={"n": g.n, "m": g.m, "cutEdgeBound": 2 * r - 3 * (k - 1)},
    )


def verify_bsw(params: BswParams, k: int, instance: str = "") -> VerificationReport:
    """Build the clique-block graph and check regularity, connectivity, and
    the 2k-factor boundary 2k(2t+1) <= 2t(2r+1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    r, t = params.r, params.t
    start = time.perf_counter()
    g = bsw_graph(params)
    deg_ok = g.regular_degree() == 2 * r + 1
    kappa = vertex_connectivity(g)
    connectivity_ok = kappa >= 2 * t + 1
    expect_factor = 2 * k * (2 * t + 1) <= 2 * t * (2 * r + 1)
    factor = find_factor(g, 2 * k)
    details: dict = {
        "n": g.n,
        "vertexConnectivity": kappa,
        "expectFactor": expect_factor,
        "hubEdgesNeeded": 2 * k * (2 * t + 1),
        "hubEdgeCapacity": 2 * t * (2 * r + 1),
    }
    if factor is not None:
        # each copy is tied to the hub by a (2t+1)-edge cut, so an even
        # factor can use at most 2t of those edges
        crossings = _hub_crossings(g, factor, r, t)
        details["copyCrossings"] = crossings
        crossings_ok = all(c % 2 == 0 and c <= 2 * t for c in crossings)
    else:
        crossings_ok = True
    passed = deg_ok and connectivity_ok and crossings_ok and (expect_factor == (factor is not None))
    millis = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        instance=instance or f"bsw-r{r}-t{t}-k{k}",
        r=r,
        k=k,
        p=0,
        hypothesis_met=True,
        factor_found=factor is not None,
        passed=passed,
        millis=millis,
        details=details,
    )


def _hub_crossings(g: Multigraph, factor: FactorResult, r: int, t: int) -> list[int]:
    hub = 2 * t + 1
    block = 2 * r + 3
    chosen = set(factor.edge_ids)
    counts = [0] * (2 * r + 1)
    for eid, u, v in g.edges():
        if eid not in chosen:
            continue
        lo, hi = min(u, v), max(u, v)
        if lo < hub <= hi:
            counts[(hi - hub) // block] += 1
    return counts


def parity_audit(g: Multigraph, k: int, trials: int, seed: int, instance: str = "") -> VerificationReport:
    """Sample random disjoint (S, T) and confirm q(S,T) and d_{G-S}(T)
    always share a parity (even target degree 2k)."""
    rng = random.Random(seed)
    start = time.perf_counter()
    violations = 0
    for _ in range(trials):
        s_set, t_set = set(), set()
        for v in range(g.n):
            roll = rng.randrange(3)
            if roll == 1:
                s_set.add(v)
            elif roll == 2:
                t_set.add(v)
        q = q_count(g, 2 * k, s_set, t_set)
        d = g.degree_sum_minus(s_set, t_set)
        if (q - d) % 2 != 0:
            violations += 1
    millis = (time.perf_counter() - start) * 1000.0
    deg = g.regular_degree()
    return VerificationReport(
        instance=instance or f"parity-n{g.n}-m{g.m}-k{k}",
        r=((deg - 1) // 2) if deg is not None and deg % 2 == 1 else -1,
        k=k,
        p=len(bridges(g)),
        hypothesis_met=True,
        factor_found=False,
        passed=violations == 0,
        millis=millis,
        details={"trials": trials, "violations": violations},
    )


def verify_extremal_instance(params: ExtremalParams, seed: int = 0, instance: str = "") -> VerificationReport:
    """One extremal construction: exact cut-edge count, no 2k-factor, a
    passing certificate at the construction partition, full equality ledger."""
    start = time.perf_counter()
    g, s_verts, t_verts = general_extremal_with_partition(params, seed)
    p = len(bridges(g))
    p_ok = p == params.cut_edges
    factor = find_factor(g, 2 * params.k)
    r_tuple = tuple(sorted(set(range(g.n)) - set(s_verts) - set(t_verts)))
    cert = PartitionCertificate(r_tuple, tuple(sorted(s_verts)), tuple(sorted(t_verts)))
    cert = check_conditions_a_f(g, params.r, params.k, cert)
    cert = replace(cert, equalities=check_extremal_equalities(g, params.k, s_verts, t_verts))
    passed = p_ok and factor is None and cert.all_conditions_hold and cert.all_equalities_hold
    millis = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        instance=instance
        or f"extremal-r{params.r}-k{params.k}-t{params.size_t}-s{params.size_s}"
        f"-b{params.blister_count}-x{params.extra_components}",
        r=params.r,
        k=params.k,
        p=p,
        hypothesis_met=True,
        factor_found=factor is not None,
        passed=passed,
        millis=millis,
        certificate=cert,
        details={"n": g.n, "m": g.m, "expectedCutEdges": params.cut_edges},
    )


def verify_control_instance(r: int, k: int, instance: str = "") -> VerificationReport:
    """Converse control: same cut-edge count, but a 2k-factor exists, so the
    characterization must produce no certificate."""
    start = time.perf_counter()
    g = bridged_chain(r, 2 * r + 4 - 3 * k)
    cert = characterization_check(g, r, k)
    factor = find_factor(g, 2 * k)
    passed = cert is None and factor is not None
    millis = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        instance=instance or f"control-chain-r{r}-k{k}",
        r=r,
        k=k,
        p=len(bridges(g)),
        hypothesis_met=True,
        factor_found=factor is not None,
        passed=passed,
        millis=millis,
        details={"n": g.n, "certificateReturned": cert is not None},
    )


# -- batch sweeps (task lists keep them picklable for --jobs) -------------------


def main_sweep_tasks(r: int, k: int, trials: int, seed: int, sizes=(6, 8, 10, 12, 14)) -> list[tuple]:
    return [
        ("main", {"r": r, "k": k, "n": sizes[i % len(sizes)], "seed": seed * 1_000_003 + i, "index": i})
        for i in range(trials)
    ]


def charzn_sweep_tasks(r: int, k: int, seed: int = 0) -> list[tuple]:
    tasks: list[tuple] = [
        (
            "extremal",
            {
                "r": p.r,
                "k": p.k,
                "size_t": p.size_t,
                "size_s": p.size_s,
                "blister_count": p.blister_count,
                "extra_components": p.extra_components,
                "seed": seed,
            },
        )
        for p in extremal_parameter_grid(r, k)
    ]
    tasks.append(("control", {"r": r, "k": k}))
    return tasks


def bsw_sweep_tasks(r: int, t: int, k: int | None = None) -> list[tuple]:
    if k is not None:
        ks = [k]
    else:
        boundary = (t * (2 * r + 1)) // (2 * t + 1)
        ks = [kk for kk in (max(1, boundary), boundary + 1) if 2 * kk <= 2 * r + 1]
    return [("bsw", {"r": r, "t": t, "k": kk}) for kk in ks]


def parity_sweep_tasks(trials: int, seed: int, per_graph: int = 20) -> list[tuple]:
    tasks = []
    remaining = trials
    i = 0
    while remaining > 0:
        batch = min(per_graph, remaining)
        n = 4 + (i % 9)  # 4..12
        if i % 3 == 0:
            d = 3 + 2 * (i % 2)
            if (n * d) % 2 == 1:
                n += 1
            kind = ("regular", {"n": n, "d": d})
        else:
            kind = ("plain", {"n": n, "m": n + (i % 7)})
        tasks.append(
            (
                "parity",
                {
                    "graph": kind,
                    "k": 1 + (i % 3),
                    "trials": batch,
                    "seed": seed * 7_777_777 + i,
                    "index": i,
                },
            )
        )
        remaining -= batch
        i += 1
    return tasks


def run_task(task: tuple) -> VerificationReport:
    kind, a = task
    if kind == "main":
        g = random_connected_regular_multigraph(a["n"], 2 * a["r"] + 1, a["seed"])
        return verify_main_theorem(
            g, a["r"], a["k"], instance=f"main-r{a['r']}-k{a['k']}-n{a['n']}-i{a['index']}"
        )
    if kind == "extremal":
        params = ExtremalParams(
            a["r"], a["k"], a["size_t"], a["size_s"], a["blister_count"], a["extra_components"]
        )
        return verify_extremal_instance(params, a["seed"])
    if kind == "control":
        return verify_control_instance(a["r"], a["k"])
    if kind == "bsw":
        return verify_bsw(BswParams(a["r"], a["t"]), a["k"])
    if kind == "parity":
        gk, ga = a["graph"]
        if gk == "regular":
            g = random_regular_multigraph(ga["n"], ga["d"], a["seed"])
        else:
            g = random_multigraph(ga["n"], ga["m"], a["seed"])
        return parity_audit(
            g, a["k"], a["trials"], a["seed"] + 1, instance=f"parity-i{a['index']}-n{g.n}-m{g.m}"
        )
    raise ValueError(f"unknown task kind {kind!r}")


def run_tasks(tasks: list[tuple], jobs: int = 1) -> list[VerificationReport]:
    """Execute sweep tasks, optionally across processes; output order is the
    task order regardless of completion order."""
    if jobs <= 1:
        return [run_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_task, tasks))
