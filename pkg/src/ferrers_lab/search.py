"""Exhaustive bipartite class enumeration and the extremal searches.

Isomorphism classes are keyed by a canonical code: the lexicographically
least tuple of biadjacency row values reachable by row and column
permutations (plus the part swap when the parts have equal size).  The
code is found by a pruned branch-and-bound that picks rows greedily while
refining an ordered partition of the columns, so only permutations
consistent with the refinement are ever touched.

Classes are generated row by row: partial matrices are deduped by the
canonical code of the partial, extended by every possible next row, and
filtered at full height.  Searches shard their per-graph checks over a
process pool when asked; results merge in enumeration order so reports
are byte-identical regardless of worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .budget import (
    CANDIDATE_GUARD,
    DEFAULT_SCAN_VERTICES,
    DEFAULT_SPECTRAL_PQ,
    BudgetExceeded,
    budget_cap,
)
from .graphs import BipartiteGraph, ferrers_from_partition, ferrers_invariant, is_ferrers
from .partitions import Partition
from .spectral import spectral_radius
from .trees import tau

MAX_CODE_SIDE = 12

#: spectral maxima within this distance of the top value tie for extremal
SPECTRAL_TIE_TOL = 1e-9


def _code_rows(rows, n):
    """Least tuple of row values over row/column permutations (parts fixed)."""
    best = None
    full = (1 << n) - 1

    def rec(remaining, cells, acc):
        nonlocal best
        if not remaining:
            cand = tuple(acc)
            if best is None or cand < best:
                best = cand
            return
        vals = {}
        for r in remaining:
            if r in vals:
                continue
            v = 0
            for cellmask, width in cells:
                v = (v << width) | ((1 << (r & cellmask).bit_count()) - 1)
            vals[r] = v
        vmin = min(vals.values())
        depth = len(acc)
        if best is not None:
            prefix = tuple(acc) + (vmin,)
            if prefix > best[: depth + 1]:
                return
        done = set()
        for r, v in vals.items():
            if v != vmin or r in done:
                continue
            done.add(r)
            newcells = []
            for cellmask, width in cells:
                ones = cellmask & r
                zeros = cellmask ^ ones
                if zeros:
                    newcells.append((zeros, zeros.bit_count()))
                if ones:
                    newcells.append((ones, ones.bit_count()))
            rest = list(remaining)
            rest.remove(r)
            acc.append(vmin)
            rec(rest, newcells, acc)
            acc.pop()

    rec(list(rows), [(full, n)], [])
    return best


def _serialize(m, n, values) -> bytes:
    out = bytearray([m, n])
    for v in values:
        out += v.to_bytes(2, "big")
    return bytes(out)


def canonical_code(G: BipartiteGraph) -> bytes:
    """Isomorphism-invariant byte code; equal codes mean isomorphic graphs.

    Parts are held fixed; when the two parts have the same size the code
    also minimizes over swapping them.  Limited to 12 rows/columns.
    """
    if G.m > MAX_CODE_SIDE or G.n > MAX_CODE_SIDE:
        raise ValueError("canonical codes support at most %d rows/columns"
                         % MAX_CODE_SIDE)
    code = _serialize(G.m, G.n, _code_rows(G.rows, G.n))
    if G.m == G.n:
        t = G.transpose()
        code = min(code, _serialize(t.m, t.n, _code_rows(t.rows, t.n)))
    return code


def canonical_form(G: BipartiteGraph) -> BipartiteGraph:
    """The representative graph rebuilt from the canonical code."""
    return graph_from_code(canonical_code(G))


def graph_from_code(code: bytes) -> BipartiteGraph:
    m, n = code[0], code[1]
    rows = [
        int.from_bytes(code[2 + 2 * i: 4 + 2 * i], "big") for i in range(m)
    ]
    return BipartiteGraph(m, n, rows)


@dataclass(frozen=True)
class ClassSpec:
    """A family of bipartite graphs to enumerate up to isomorphism."""

    kind: str
    p: int = 0
    q: int = 0
    e: int = 0
    degrees: tuple = ()
    max_vertices: int = 0
    no_isolated: bool = False
    exclude_complete: bool = False

    @classmethod
    def kpqe(cls, p: int, q: int, e: int) -> "ClassSpec":
        if not (2 <= p <= q):
            raise ValueError("need 2 <= p <= q")
        if not (1 < e < p * q):
            raise ValueError("need 1 < e < p*q")
        return cls(kind="kpqe", p=p, q=q, e=e, no_isolated=True, exclude_complete=True)

    @classmethod
    def degree_class(cls, degrees: Partition) -> "ClassSpec":
        return cls(kind="degree_class", degrees=tuple(degrees), no_isolated=True)

    @classmethod
    def all_connected_bipartite(cls, max_vertices: int) -> "ClassSpec":
        if max_vertices < 2:
            raise ValueError("need at least 2 vertices")
        return cls(kind="all_connected_bipartite", max_vertices=max_vertices,
                   no_isolated=True)

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "kpqe":
            out.update(p=self.p, q=self.q, e=self.e)
        elif self.kind == "degree_class":
            out.update(degrees=list(self.degrees))
        else:
            out.update(max_vertices=self.max_vertices)
        out.update(no_isolated=self.no_isolated,
                   exclude_complete=self.exclude_complete)
        return out


class _Counter:
    __slots__ = ("candidates", "guard")

    def __init__(self, guard):
        self.candidates = 0
        self.guard = guard

    def bump(self, progress):
        self.candidates += 1
        if self.candidates > self.guard:
            raise BudgetExceeded(
                "class enumeration examined more than %d candidates" % self.guard,
                progress=progress,
            )


def _classes_mn(m, n, counter, keep_partial=None, row_candidates=None):
    """All m x n biadjacency classes (parts fixed), grown row by row.

    ``keep_partial(rows)`` may reject a partial matrix (monotone filters
    only, e.g. edge budgets); rejected partials are never extended.
    ``row_candidates(rows)`` narrows the masks tried for the next row.
    """
    level = {(): ()}
    for depth in range(m):
        nxt = {}
        for rows in level.values():
            masks = row_candidates(rows) if row_candidates else range(1 << n)
            for mask in masks:
                counter.bump(progress={"rows_done": depth, "classes": len(level)})
                cand = rows + (mask,)
                if keep_partial is not None and not keep_partial(cand):
                    continue
                code = _serialize(depth + 1, n, _code_rows(cand, n))
                if code not in nxt:
                    nxt[code] = cand
        level = nxt
    return list(level.values())


def _dedupe_final(found):
    """Dedupe full-height graphs by canonical code (with part swap).

    Keeps the first-seen graph as the class representative: rebuilding
    from the code could swap equal-size parts and lose a class constraint
    such as "row degrees equal D".  Enumeration order is deterministic, so
    representatives are too.
    """
    by_code = {}
    for g in found:
        code = canonical_code(g)
        if code not in by_code:
            by_code[code] = g
    return [by_code[c] for c in sorted(by_code)]


def enumerate_class(spec: ClassSpec, guard: int | None = None) -> list:
    """One representative per isomorphism class, sorted by canonical code."""
    counter = _Counter(budget_cap(CANDIDATE_GUARD, guard))
    if spec.kind == "kpqe":
        return _enumerate_kpqe(spec, counter)
    if spec.kind == "degree_class":
        return _enumerate_degree_class(spec, counter)
    if spec.kind == "all_connected_bipartite":
        return _enumerate_connected(spec, counter)
    raise ValueError("unknown class kind %r" % spec.kind)


def _enumerate_kpqe(spec, counter):
    p, q, e = spec.p, spec.q, spec.e

    def keep(rows):
        used = sum(r.bit_count() for r in rows)
        left = (p - len(rows)) * q
        return used <= e <= used + left

    out = []
    for rows in _classes_mn(p, q, counter, keep_partial=keep):
        g = BipartiteGraph(p, q, rows)
        if g.edge_count() != e:
            continue
        if spec.no_isolated and (0 in rows or any(d == 0 for d in g.degrees_v())):
            continue
        if spec.exclude_complete and g.edge_count() == p * q:
            continue
        out.append(g)
    return _dedupe_final(out)


def _enumerate_degree_class(spec, counter):
    degs = sorted(spec.degrees, reverse=True)
    if not degs or degs[-1] < 1:
        raise ValueError("degree sequence must be positive")
    m, total = len(degs), sum(degs)
    target = sorted(degs)
    out = []
    for ny in range(degs[0], total + 1):
        by_popcount = {}
        for mask in range(1 << ny):
            by_popcount.setdefault(mask.bit_count(), []).append(mask)

        def candidates(rows):
            remaining = list(target)
            for r in rows:
                remaining.remove(r.bit_count())
            masks = []
            for d in sorted(set(remaining)):
                masks.extend(by_popcount.get(d, ()))
            return masks

        for rows in _classes_mn(m, ny, counter, row_candidates=candidates):
            g = BipartiteGraph(m, ny, rows)
            if sorted(g.degrees_u()) != target:
                continue
            if any(d == 0 for d in g.degrees_v()):
                continue
            out.append(g)
    return _dedupe_final(out)


def _enumerate_connected(spec, counter):
    out = []
    for m in range(1, spec.max_vertices // 2 + 1):
        for n in range(m, spec.max_vertices - m + 1):
            for rows in _classes_mn(m, n, counter):
                g = BipartiteGraph(m, n, rows)
                if g.is_connected():
                    out.append(g)
    return _dedupe_final(out)


@dataclass
class SearchReport:
    """Outcome record of one exhaustive enumeration run."""

    spec: ClassSpec
    examined: int
    extremal: list
    counterexamples: list
    elapsed: float
    checked_property: str
    details: dict = field(default_factory=dict)
    extremal_graphs: list = field(default_factory=list)
    counterexample_graphs: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "class": self.spec.as_dict(),
            "examined": self.examined,
            "extremal": [c.hex() for c in self.extremal],
            "counterexamples": [c.hex() for c in self.counterexamples],
            "elapsed": self.elapsed,
            "checked_property": self.checked_property,
            "details": self.details,
        }


def _ferrers_check_one(g: BipartiteGraph):
    t = tau(g)
    inv = ferrers_invariant(g)
    return t, inv, t == inv and is_ferrers(g)


def _pmap(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            return pool.map(fn, items, chunksize=max(1, len(items) // (jobs * 8)))
    return [fn(item) for item in items]


def verify_ferrers_bound(max_vertices: int, jobs: int = 1,
                         budget: int | None = None) -> SearchReport:
    """Check tau <= degree-product invariant over every connected bipartite
    isomorphism class with at most ``max_vertices`` vertices.

    Counterexamples (expected none) are graphs with tau strictly larger;
    extremal graphs attain equality.  Equality cases that fail the
    staircase recognition are surfaced separately in the details.
    """
    cap = budget_cap(DEFAULT_SCAN_VERTICES, budget)
    if max_vertices > cap:
        raise BudgetExceeded(
            "scan of %d vertices exceeds the budget of %d" % (max_vertices, cap)
        )
    start = time.monotonic()
    spec = ClassSpec.all_connected_bipartite(max_vertices)
    graphs = enumerate_class(spec)
    results = _pmap(_ferrers_check_one, graphs, jobs)
    extremal, counterexamples = [], []
    extremal_graphs, counterexample_graphs = [], []
    equality_ferrers = 0
    equality_other = []
    for g, (t, inv, eq_ferrers) in zip(graphs, results):
        if t > inv:
            counterexamples.append(canonical_code(g))
            counterexample_graphs.append(g)
        elif t == inv:
            extremal.append(canonical_code(g))
            extremal_graphs.append(g)
            if eq_ferrers:
                equality_ferrers += 1
            else:
                equality_other.append(canonical_code(g).hex())
    return SearchReport(
        spec=spec,
        examined=len(graphs),
        extremal=extremal,
        counterexamples=counterexamples,
        elapsed=time.monotonic() - start,
        checked_property="tree_count_le_degree_product",
        details={
            "equality_ferrers": equality_ferrers,
            "equality_non_ferrers": equality_other,
        },
        extremal_graphs=extremal_graphs,
        counterexample_graphs=counterexample_graphs,
    )


def _is_complete_minus_vertex(g: BipartiteGraph) -> bool:
    """True iff removing one vertex leaves a complete bipartite graph."""
    full = (1 << g.n) - 1
    if g.m >= 2:
        for i in range(g.m):
            if all(r == full for idx, r in enumerate(g.rows) if idx != i):
                return True
    if g.n >= 2:
        for j in range(g.n):
            bit = 1 << j
            if all(r | bit == full for r in g.rows):
                return True
    return False


def spectral_search(p: int, q: int, e: int, jobs: int = 1,
                    budget: int | None = None) -> SearchReport:
    """Maximize the adjacency spectral radius over the (p, q, e) class.

    Reports every maximizer within 1e-9 of the optimum.  Each maximizer is
    checked to be a staircase graph (failures become counterexamples) and
    classified for the one-vertex-extension-of-complete-bipartite shape.

    The class admits disconnected members, and for some (p, q, e) the
    optimum is attained only by a disjoint union of complete bipartite
    blocks, which is not a staircase; such maximizers are reported as
    counterexamples together with their connectivity, not suppressed.
    Classes with e too small to cover every vertex are empty and yield an
    empty report.
    """
    spec = ClassSpec.kpqe(p, q, e)
    cap = budget_cap(DEFAULT_SPECTRAL_PQ, budget)
    if p * q > cap:
        raise BudgetExceeded(
            "spectral search over p*q=%d exceeds the budget of %d" % (p * q, cap)
        )
    start = time.monotonic()
    graphs = enumerate_class(spec)
    if not graphs:
        return SearchReport(
            spec=spec,
            examined=0,
            extremal=[],
            counterexamples=[],
            elapsed=time.monotonic() - start,
            checked_property="spectral_radius_maximizer_is_staircase",
            details={"lambda_max": None, "maximizer_count": 0,
                     "one_vertex_extension_shape": [],
                     "maximizer_connected": []},
        )
    values = _pmap(spectral_radius, graphs, jobs)
    top = max(values)
    extremal, extremal_graphs = [], []
    counterexamples, counterexample_graphs = [], []
    shapes, connected_flags = [], []
    for g, val in zip(graphs, values):
        if val >= top - SPECTRAL_TIE_TOL:
            code = canonical_code(g)
            extremal.append(code)
            extremal_graphs.append(g)
            shapes.append(_is_complete_minus_vertex(g))
            connected_flags.append(g.is_connected())
            if not is_ferrers(g):
                counterexamples.append(code)
                counterexample_graphs.append(g)
    return SearchReport(
        spec=spec,
        examined=len(graphs),
        extremal=extremal,
        counterexamples=counterexamples,
        elapsed=time.monotonic() - start,
        checked_property="spectral_radius_maximizer_is_staircase",
        details={
            "lambda_max": top,
            "maximizer_count": len(extremal),
            "one_vertex_extension_shape": shapes,
            "maximizer_connected": connected_flags,
        },
        extremal_graphs=extremal_graphs,
        counterexample_graphs=counterexample_graphs,
    )


def degree_class_max(degrees: Partition, jobs: int = 1,
                     budget: int | None = None) -> SearchReport:
    """Maximize the spectral radius over graphs with fixed row degrees.

    The staircase graph with those row degrees must be among the
    maximizers; if it is not, it is recorded as a counterexample.
    """
    degrees = Partition(degrees)
    spec = ClassSpec.degree_class(degrees)
    cap = budget_cap(DEFAULT_SPECTRAL_PQ, budget)
    if len(degrees) * degrees[0] > cap:
        raise BudgetExceeded(
            "degree class m*d1=%d exceeds the budget of %d"
            % (len(degrees) * degrees[0], cap)
        )
    start = time.monotonic()
    graphs = enumerate_class(spec)
    values = _pmap(spectral_radius, graphs, jobs)
    top = max(values)
    staircase_code = canonical_code(ferrers_from_partition(degrees, degrees[0]))
    extremal, extremal_graphs = [], []
    for g, val in zip(graphs, values):
        if val >= top - SPECTRAL_TIE_TOL:
            extremal.append(canonical_code(g))
            extremal_graphs.append(g)
    attains = staircase_code in extremal
    counterexamples = [] if attains else [staircase_code]
    return SearchReport(
        spec=spec,
        examined=len(graphs),
        extremal=extremal,
        counterexamples=counterexamples,
        elapsed=time.monotonic() - start,
        checked_property="staircase_attains_spectral_max",
        details={"lambda_max": top, "staircase_attains_max": attains},
        extremal_graphs=extremal_graphs,
        counterexample_graphs=[] if attains else [graph_from_code(staircase_code)],
    )
