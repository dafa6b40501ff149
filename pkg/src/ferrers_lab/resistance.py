"""Exact resistance distance and edge-deletion invariance checks.

Resistance between two vertices is computed two independent ways on every
call: from the Moore-Penrose inverse of the Laplacian (diagonal-plus-cross
term formula) and as a ratio of Laplacian minors.  The two must agree
exactly or the call fails loudly.

``edge_deletion_equivalence`` evaluates, in exact rational arithmetic, the
eleven equivalent statements characterizing when deleting one edge leaves
the resistance across another edge unchanged.  The "for any g-inverse"
statements are certified with two structurally different g-inverses (the
Moore-Penrose one and a bordered one); equality for one g-inverse carries
to all of them.

The module also verifies the two identities driving the staircase-graph
tree-count formula: an explicit certificate vector w with L w equal to an
edge incidence vector, and the four-way tree-count factorization
tau(G\\e) * tau(G\\f) = tau(G) * tau(G\\{e,f}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import GInverse, RatMatrix, bordered_ginverse, det_int, moore_penrose_laplacian
from .graphs import BipartiteGraph, Graph, ferrers_from_partition, laplacian
from .partitions import Partition


@dataclass(frozen=True)
class IncidenceVector:
    """Signed indicator of an oriented edge: +1 at ``i``, -1 at ``j``.

    Edges are oriented from the lower-numbered endpoint, which keeps every
    construction deterministic; the checks below are orientation-invariant.
    """

    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise ValueError("bad incidence endpoints")

    @classmethod
    def for_edge(cls, n: int, edge) -> "IncidenceVector":
        a, b = edge
        return cls(n, min(a, b), max(a, b))

    def as_list(self) -> list:
        vec = [Fraction(0)] * self.n
        vec[self.i - 1] = Fraction(1)
        vec[self.j - 1] = Fraction(-1)
        return vec


class _GraphCtx:
    """Per-graph cache of the exact objects the equivalence checks reuse."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.lap_int = laplacian(graph)
        self.lap = RatMatrix(self.lap_int)
        self._mp = None
        self._bordered = {}
        self._tau = None

    @property
    def mp(self) -> GInverse:
        if self._mp is None:
            self._mp = moore_penrose_laplacian(self.lap)
        return self._mp

    def bordered(self, pivot: int) -> GInverse:
        if pivot not in self._bordered:
            self._bordered[pivot] = bordered_ginverse(self.lap, pivot)
        return self._bordered[pivot]

    def tau(self) -> int:
        if self._tau is None:
            self._tau = det_int(
                [row[1:] for row in self.lap_int[1:]]
            )
        return self._tau

    def minor_det(self, drop) -> int:
        drop = set(k - 1 for k in drop)
        return det_int(
            [
                [x for j, x in enumerate(row) if j not in drop]
                for i, row in enumerate(self.lap_int)
                if i not in drop
            ]
        )

    def resistance(self, i: int, j: int) -> Fraction:
        plus = self.mp.matrix
        a, b = i - 1, j - 1
        via_mp = plus[a, a] + plus[b, b] - 2 * plus[a, b]
        via_det = Fraction(self.minor_det([i, j]), self.minor_det([i]))
        if via_mp != via_det:
            raise AssertionError(
                "resistance routes disagree: %s vs %s" % (via_mp, via_det)
            )
        return via_mp


def resistance(G, i: int, j: int) -> Fraction:
    """Exact resistance distance between distinct vertices of a connected graph."""
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    if i == j:
        raise ValueError("resistance needs two distinct vertices")
    if not (1 <= i <= G.vcount and 1 <= j <= G.vcount):
        raise ValueError("vertex out of range")
    if not G.is_connected():
        raise ValueError("resistance requires a connected graph")
    return _GraphCtx(G).resistance(i, j)


def _resistance_in_component(G: Graph, i: int, j: int) -> Fraction:
    """Resistance inside the component containing both vertices."""
    for comp in G.components():
        if i in comp:
            if j not in comp:
                raise ValueError("vertices lie in different components")
            if len(comp) == G.vcount:
                return resistance(G, i, j)
            sub = G.induced(comp)
            return resistance(sub, comp.index(i) + 1, comp.index(j) + 1)
    raise ValueError("vertex out of range")


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the eleven-condition edge-deletion equivalence check."""

    e: tuple
    f: tuple
    conditions: dict
    all_agree: bool
    witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "e": list(self.e),
            "f": list(self.f),
            "conditions": dict(self.conditions),
            "all_agree": self.all_agree,
            "witnesses": {
                name: [
                    {
                        "ginverse": w["ginverse"],
                        "coords": list(w["coords"]),
                        "values": [str(v) for v in w["values"]],
                    }
                    for w in entries
                ]
                for name, entries in self.witnesses.items()
            },
        }


def _coord_pair(ginv: GInverse, vec: IncidenceVector, a: int, b: int):
    applied = ginv.matrix.matvec(vec.as_list())
    return applied[a - 1], applied[b - 1]


def edge_deletion_equivalence(G: Graph, e, f, _ctx=None, _ctx_e=None, _ctx_f=None) -> EquivalenceReport:
    """Evaluate the eleven equivalent edge-deletion statements exactly.

    ``e`` and ``f`` must be vertex-disjoint edges of a graph on at least 4
    vertices whose single-edge deletions stay connected.  Returns all
    eleven booleans plus, for each g-inverse-based statement, the compared
    coordinates as exact rationals.
    """
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    n = G.vcount
    if n < 4:
        raise ValueError("graph must have at least 4 vertices")
    e = tuple(sorted(e))
    f = tuple(sorted(f))
    if e not in G.edges:
        raise ValueError("e=%r is not an edge" % (e,))
    if f not in G.edges:
        raise ValueError("f=%r is not an edge" % (f,))
    if set(e) & set(f):
        raise ValueError("e and f must not share a vertex")
    g_e = G.delete_edge(e)
    g_f = G.delete_edge(f)
    if not g_e.is_connected():
        raise ValueError("deleting e disconnects the graph")
    if not g_f.is_connected():
        raise ValueError("deleting f disconnects the graph")

    i, j = e
    k, l = f
    ctx = _ctx or _GraphCtx(G)
    ctx_e = _ctx_e or _GraphCtx(g_e)
    ctx_f = _ctx_f or _GraphCtx(g_f)
    x_e = IncidenceVector.for_edge(n, e)
    x_f = IncidenceVector.for_edge(n, f)

    outside = [v for v in range(1, n + 1) if v not in {i, j, k, l}]
    pivot = outside[0] if outside else i

    conditions = {}
    witnesses = {}

    conditions["i"] = ctx.resistance(i, j) == ctx_f.resistance(i, j)
    conditions["ii"] = ctx.resistance(k, l) == ctx_e.resistance(k, l)
    conditions["iii"] = ctx_e.tau() * ctx_f.tau() == ctx.tau() * _tau_without(G, e, f)

    def ginv_condition(name, ginvs_ctx, vec, a, b):
        entries = []
        verdict = True
        for ginv in ginvs_ctx:
            va, vb = _coord_pair(ginv, vec, a, b)
            entries.append({"ginverse": ginv.kind, "coords": (a, b), "values": (va, vb)})
            verdict = verdict and va == vb
        conditions[name] = verdict
        witnesses[name] = entries

    ginv_condition("iv", [ctx.mp], x_f, i, j)
    ginv_condition("v", [ctx.mp, ctx.bordered(pivot)], x_f, i, j)
    ginv_condition("vi", [ctx_f.mp], x_f, i, j)
    ginv_condition("vii", [ctx_f.mp, ctx_f.bordered(pivot)], x_f, i, j)
    ginv_condition("viii", [ctx.mp], x_e, k, l)
    ginv_condition("ix", [ctx.mp, ctx.bordered(pivot)], x_e, k, l)
    ginv_condition("x", [ctx_e.mp], x_e, k, l)
    ginv_condition("xi", [ctx_e.mp, ctx_e.bordered(pivot)], x_e, k, l)

    values = set(conditions.values())
    return EquivalenceReport(
        e=e,
        f=f,
        conditions=conditions,
        all_agree=len(values) == 1,
        witnesses=witnesses,
    )


def _tau_without(G: Graph, e, f) -> int:
    lap = laplacian(G.delete_edge(e).delete_edge(f))
    return det_int([row[1:] for row in lap[1:]])


def edge_deletion_monotonicity(G: Graph, f, i: int, j: int) -> bool:
    """Check that deleting a non-cut edge cannot lower resistance.

    Returns True when the increase is strict, False on equality; raises if
    the inequality fails (it cannot, for correct arithmetic) or if ``f``
    is a cut edge.
    """
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    if not G.is_connected():
        raise ValueError("graph must be connected")
    g_f = G.delete_edge(f)
    if not g_f.is_connected():
        raise ValueError("f is a cut edge")
    before = resistance(G, i, j)
    after = resistance(g_f, i, j)
    if after < before:
        raise AssertionError(
            "resistance decreased from %s to %s after deleting %r" % (before, after, f)
        )
    return after > before


@dataclass(frozen=True)
class CertificateReport:
    w_is_solution: bool
    resistance_equal: bool


def ferrers_edge_invariance(lmbda: Partition, p: int, k: int) -> CertificateReport:
    """Verify the explicit-certificate identities on a staircase graph.

    The graph has row degrees ``lmbda`` with the first ``p`` rows full
    (degree n = lmbda_1) and row p+1 of degree ``k`` < n.  The vector

        w = (1/p) * [-1/n ... -1/n, (p-1)/n, 0 ... 0, -1]

    (p-1 leading entries, then position p, then zeros, then position m+n)
    must satisfy L w = x_f for f = {u_p, v_n}; and deleting f must leave
    the resistance between u_{p+1} and v_k unchanged.  Both checks are
    exact.  When deleting f isolates v_n (p = 1), the resistance after
    deletion is taken in the component containing both vertices.
    """
    m = len(lmbda)
    n = lmbda[0] if m else 0
    if m < 2:
        raise ValueError("need at least two rows")
    if not 1 <= p <= m - 1:
        raise ValueError("p=%d out of range 1..%d" % (p, m - 1))
    if any(lmbda[i] != n for i in range(p)):
        raise ValueError("rows 1..p must have full degree %d" % n)
    if lmbda[p] != k:
        raise ValueError("row p+1 has degree %d, expected k=%d" % (lmbda[p], k))
    if k >= n:
        raise ValueError("k must be smaller than the column count %d" % n)

    G = ferrers_from_partition(lmbda, n).to_graph()
    total = m + n
    w = [Fraction(0)] * total
    for idx in range(p - 1):
        w[idx] = Fraction(-1, p * n)
    w[p - 1] = Fraction(p - 1, p * n)
    w[total - 1] = Fraction(-1, p)

    lap = RatMatrix(laplacian(G))
    f_edge = (p, m + n)
    x_f = IncidenceVector.for_edge(total, f_edge).as_list()
    w_ok = lap.matvec(w) == x_f

    u_next, v_k = p + 1, m + k
    before = resistance(G, u_next, v_k)
    g_f = G.delete_edge(f_edge)
    if g_f.is_connected():
        after = resistance(g_f, u_next, v_k)
    else:
        after = _resistance_in_component(g_f, u_next, v_k)
    return CertificateReport(w_is_solution=w_ok, resistance_equal=before == after)


def ferrers_tree_identity(lmbda: Partition) -> bool:
    """Verify tau(G\\e) * tau(G\\f) == tau(G) * tau(G\\{e,f}) on a staircase graph.

    The pair is e = {u_{p+1}, v_k}, f = {u_p, v_n} with p the number of
    full rows and k the next row's degree.  The product form holds
    degenerately (0 = 0) when a deletion disconnects the graph.  Uses four
    independent Laplacian-cofactor computations.
    """
    m = len(lmbda)
    n = lmbda[0] if m else 0
    p = sum(1 for part in lmbda if part == n)
    if p >= m:
        raise ValueError("complete bipartite graph: no admissible edge pair")
    k = lmbda[p]
    G = ferrers_from_partition(lmbda, n).to_graph()
    e = (p + 1, m + k)
    f = (p, m + n)
    if e not in G.edges or f not in G.edges:
        raise ValueError("expected edges %r and %r are absent" % (e, f))

    def _tau(graph):
        lap = laplacian(graph)
        return det_int([row[1:] for row in lap[1:]])

    return _tau(G.delete_edge(e)) * _tau(G.delete_edge(f)) == _tau(G) * _tau(
        G.delete_edge(e).delete_edge(f)
    )


# ---------------------------------------------------------------------------
# small general-graph enumeration for the exhaustive equivalence scan
# ---------------------------------------------------------------------------


def _refine_colors(n, adj):
    colors = [0] * n
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in range(n) if adj[v] >> u & 1)
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_adjacency(n, adj):
    """Minimum upper-triangle bitstring over color-respecting relabelings."""
    colors = _refine_colors(n, adj)
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    grouped = [classes[c] for c in sorted(classes)]
    best = None
    for perm_parts in itertools.product(*(itertools.permutations(g) for g in grouped)):
        order = [v for part in perm_parts for v in part]
        pos = [0] * n
        for newpos, v in enumerate(order):
            pos[v] = newpos
        key = 0
        for v in range(n):
            mask = adj[v]
            while mask:
                low = mask & -mask
                u = low.bit_length() - 1
                mask ^= low
                if u > v:
                    a, b = pos[v], pos[u]
                    if a > b:
                        a, b = b, a
                    key |= 1 << (a * n + b)
        if best is None or key < best:
            best = key
    return best


_GRAPH_REPS_CACHE = {}


def _graph_reps(n):
    """All graphs on n vertices up to isomorphism, as adjacency-mask tuples."""
    if n in _GRAPH_REPS_CACHE:
        return _GRAPH_REPS_CACHE[n]
    if n == 1:
        reps = [(0,)]
    else:
        reps = []
        seen = set()
        for smaller in _graph_reps(n - 1):
            for nb in range(1 << (n - 1)):
                adj = [row | ((nb >> v & 1) << (n - 1)) for v, row in enumerate(smaller)]
                adj.append(nb)
                key = _canonical_adjacency(n, adj)
                if key not in seen:
                    seen.add(key)
                    reps.append(tuple(adj))
    _GRAPH_REPS_CACHE[n] = reps
    return reps


def connected_graphs(n: int) -> list:
    """Connected graphs on exactly n vertices, one per isomorphism class."""
    out = []
    for adj in _graph_reps(n):
        edges = [
            (v + 1, u + 1)
            for v in range(n)
            for u in range(v + 1, n)
            if adj[v] >> u & 1
        ]
        g = Graph(n, edges)
        if g.is_connected():
            out.append(g)
    return out


def admissible_edge_pairs(G: Graph) -> list:
    """Vertex-disjoint edge pairs whose single deletions stay connected."""
    edges = G.sorted_edges()
    good = [e for e in edges if G.delete_edge(e).is_connected()]
    good_set = set(good)
    return [
        (e, f)
        for idx, e in enumerate(edges)
        for f in edges[idx + 1:]
        if not set(e) & set(f) and e in good_set and f in good_set
    ]


def _scan_one(G: Graph):
    ctx = _GraphCtx(G)
    edge_ctx = {}
    pairs = 0
    failures = []
    for e, f in admissible_edge_pairs(G):
        if e not in edge_ctx:
            edge_ctx[e] = _GraphCtx(G.delete_edge(e))
        if f not in edge_ctx:
            edge_ctx[f] = _GraphCtx(G.delete_edge(f))
        report = edge_deletion_equivalence(
            G, e, f, _ctx=ctx, _ctx_e=edge_ctx[e], _ctx_f=edge_ctx[f]
        )
        pairs += 1
        if not report.all_agree:
            failures.append(report.as_dict())
    return pairs, failures


def edge_deletion_equivalence_scan(max_n: int, jobs: int = 1) -> dict:
    """Run the eleven-condition check over every connected graph up to max_n.

    Covers all isomorphism classes with 4..max_n vertices and every
    admissible edge pair; returns counts and any disagreeing reports
    (expected none).
    """
    graphs = []
    for n in range(4, max_n + 1):
        graphs.extend(connected_graphs(n))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_scan_one, graphs)
    else:
        results = [_scan_one(g) for g in graphs]
    pairs_total = sum(r[0] for r in results)
    failures = [fail for r in results for fail in r[1]]
    return {
        "max_n": max_n,
        "graphs_checked": len(graphs),
        "pairs_checked": pairs_total,
        "all_agree_everywhere": not failures,
        "failures": failures,
    }
