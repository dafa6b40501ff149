"""Graph types, Ferrers construction/recognition, and matrix builders.

``BipartiteGraph`` stores bit-packed biadjacency rows (bit j of row i set
iff u_{i+1} ~ v_{j+1}).  ``Graph`` is a plain vertex-count plus edge set
with 1-based vertices.  Bipartite graphs convert to general ones with the
U-part first (u_1..u_m become 1..m, v_1..v_n become m+1..m+n), so the
Laplacian shows the biadjacency block structure directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""


class BipartiteGraph:
    """Simple bipartite graph on parts U (rows) and V (columns)."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows):
        rows = tuple(int(r) for r in rows)
        if m < 1 or n < 1:
            raise ValueError("both parts must be nonempty")
        if len(rows) != m:
            raise ValueError("expected %d rows, got %d" % (m, len(rows)))
        full = (1 << n) - 1
        if any(r < 0 or r > full for r in rows):
            raise ValueError("row mask out of range for %d columns" % n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteGraph is immutable")

    def __reduce__(self):
        return (BipartiteGraph, (self.m, self.n, self.rows))

    @classmethod
    def from_edges(cls, m: int, n: int, edges) -> "BipartiteGraph":
        """Build from (i, j) pairs meaning u_i ~ v_j, 1-based."""
        rows = [0] * m
        for i, j in edges:
            if not (1 <= i <= m and 1 <= j <= n):
                raise ValueError("edge (%d,%d) out of range" % (i, j))
            rows[i - 1] |= 1 << (j - 1)
        return cls(m, n, rows)

    @property
    def vcount(self) -> int:
        return self.m + self.n

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def edges(self):
        """Yield biadjacency pairs (i, j), row-major, 1-based."""
        for i, r in enumerate(self.rows, start=1):
            mask = r
            while mask:
                low = mask & -mask
                yield (i, low.bit_length())
                mask ^= low

    def degrees_u(self) -> list:
        return [r.bit_count() for r in self.rows]

    def degrees_v(self) -> list:
        return [sum(r >> j & 1 for r in self.rows) for j in range(self.n)]

    def degrees(self) -> list:
        """All vertex degrees, U-part first."""
        return self.degrees_u() + self.degrees_v()

    def transpose(self) -> "BipartiteGraph":
        cols = [
            sum((self.rows[i] >> j & 1) << i for i in range(self.m))
            for j in range(self.n)
        ]
        return BipartiteGraph(self.n, self.m, cols)

    def to_graph(self) -> "Graph":
        edges = [(i, self.m + j) for i, j in self.edges()]
        return Graph(self.m + self.n, edges)

    def is_connected(self) -> bool:
        return self.to_graph().is_connected()

    def delete_u(self, i: int) -> "BipartiteGraph":
        """Remove row vertex u_i (requires m >= 2)."""
        rows = list(self.rows)
        del rows[i - 1]
        return BipartiteGraph(self.m - 1, self.n, rows)

    def delete_v(self, j: int) -> "BipartiteGraph":
        """Remove column vertex v_j (requires n >= 2)."""
        low = (1 << (j - 1)) - 1
        rows = [(r & low) | ((r >> j) << (j - 1)) for r in self.rows]
        return BipartiteGraph(self.m, self.n - 1, rows)

    def stats(self) -> "GraphStats":
        return GraphStats(
            degrees=self.degrees(),
            e=self.edge_count(),
            rho=Fraction(self.edge_count(), self.m * self.n),
            connected=self.is_connected(),
        )

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and self.m == other.m
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, self.rows))

    def __repr__(self):
        return "BipartiteGraph(m=%d, n=%d, rows=%r)" % (self.m, self.n, self.rows)


class Graph:
    """Simple undirected graph with vertices 1..vcount."""

    __slots__ = ("vcount", "edges")

    def __init__(self, vcount: int, edges):
        if vcount < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError("loop at vertex %d" % a)
            if not (1 <= a <= vcount and 1 <= b <= vcount):
                raise ValueError("edge (%d,%d) out of range" % (a, b))
            norm.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "vcount", vcount)
        object.__setattr__(self, "edges", frozenset(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.vcount, tuple(sorted(self.edges))))

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency(self) -> list:
        """Neighbor lists indexed by vertex (entry 0 unused)."""
        adj = [[] for _ in range(self.vcount + 1)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def degrees(self) -> list:
        deg = [0] * (self.vcount + 1)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg[1:]

    def delete_edge(self, edge) -> "Graph":
        a, b = edge
        key = (a, b) if a < b else (b, a)
        if key not in self.edges:
            raise ValueError("edge %r not present" % (edge,))
        return Graph(self.vcount, self.edges - {key})

    def components(self) -> list:
        """Connected components as sorted vertex lists."""
        adj = self.adjacency()
        seen = [False] * (self.vcount + 1)
        comps = []
        for start in range(1, self.vcount + 1):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.vcount <= 1:
            return True
        return len(self.components()) == 1

    def induced(self, vertices) -> "Graph":
        """Induced subgraph; kept vertices are renumbered 1..k in sorted order."""
        vertices = sorted(set(vertices))
        index = {v: i + 1 for i, v in enumerate(vertices)}
        keep = set(vertices)
        edges = [
            (index[a], index[b]) for a, b in self.edges if a in keep and b in keep
        ]
        return Graph(len(vertices), edges)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(1, self.vcount + 1) if u != v])

    def is_cut_vertex(self, v: int) -> bool:
        """True iff removing ``v`` increases the number of components."""
        before = len(self.components())
        # the removed vertex itself counted as a component only if isolated
        if not any(v in (a, b) for a, b in self.edges):
            return False
        after = len(self.delete_vertex(v).components())
        return after > before

    def two_coloring(self):
        """A proper 2-coloring as a dict vertex -> 0/1, or None if odd cycle."""
        adj = self.adjacency()
        color = {}
        for start in range(1, self.vcount + 1):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in color:
                        color[w] = color[v] ^ 1
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vcount == other.vcount
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vcount, self.edges))

    def __repr__(self):
        return "Graph(vcount=%d, edges=%d)" % (self.vcount, len(self.edges))


@dataclass(frozen=True)
class GraphStats:
    degrees: list
    e: int
    rho: Fraction
    connected: bool


def ferrers_from_partition(lmbda: Partition, ncols: int) -> BipartiteGraph:
    """Staircase biadjacency graph: row i covers columns 1..lambda_i.

    Requires lambda_1 <= ncols.  With lambda_1 < ncols the rightmost
    columns are isolated vertices; the graph is built anyway and reported
    disconnected by ``stats``.
    """
    if not len(lmbda):
        raise ValueError("partition must be nonempty")
    if lmbda[0] > ncols:
        raise ValueError("largest part %d exceeds column count %d" % (lmbda[0], ncols))
    return BipartiteGraph(len(lmbda), ncols, [(1 << p) - 1 for p in lmbda])


def _rev_bits(mask: int, width: int) -> int:
    out = 0
    for j in range(width):
        if mask >> j & 1:
            out |= 1 << (width - 1 - j)
    return out


def is_ferrers(G: BipartiteGraph) -> bool:
    """True iff some row/column permutation puts the biadjacency in staircase form.

    Sorts rows and columns by degree (nonincreasing, ties by
    lexicographically larger row/column first) and checks that every row is
    a left-justified run; nested neighborhoods make the sorted arrangement
    staircase whenever any arrangement is.  Graphs with isolated vertices
    fail: a staircase has a full first row and a nonempty last one.
    """
    degs_v = G.degrees_v()
    if any(d == 0 for d in degs_v) or any(r == 0 for r in G.rows):
        return False
    # order columns by (degree desc, column bit-vector desc read from row 1)
    cols = [
        sum((G.rows[i] >> j & 1) << (G.m - 1 - i) for i in range(G.m))
        for j in range(G.n)
    ]
    order = sorted(range(G.n), key=lambda j: (-degs_v[j], -cols[j]))
    remap = [0] * G.n
    for newpos, j in enumerate(order):
        remap[j] = newpos
    rows = []
    for r in G.rows:
        out = 0
        mask = r
        while mask:
            low = mask & -mask
            out |= 1 << remap[low.bit_length() - 1]
            mask ^= low
        rows.append(out)
    rows.sort(key=lambda r: (-r.bit_count(), -_rev_bits(r, G.n)))
    return all(r == (1 << r.bit_count()) - 1 for r in rows)


def laplacian(G) -> list:
    """Laplacian as a dense integer matrix (degree diagonal minus adjacency)."""
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    n = G.vcount
    lap = [[0] * n for _ in range(n)]
    for a, b in G.edges:
        lap[a - 1][b - 1] -= 1
        lap[b - 1][a - 1] -= 1
        lap[a - 1][a - 1] += 1
        lap[b - 1][b - 1] += 1
    return lap


def normalized_laplacian(G) -> list:
    """Degree-normalized Laplacian D^{-1/2} L D^{-1/2} as a float matrix."""
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    deg = G.degrees()
    if any(d == 0 for d in deg):
        raise ValueError("normalized Laplacian undefined with isolated vertices")
    n = G.vcount
    scale = [1.0 / math.sqrt(d) for d in deg]
    lap = laplacian(G)
    return [
        [lap[i][j] * scale[i] * scale[j] for j in range(n)]
        for i in range(n)
    ]


def ferrers_invariant(G: BipartiteGraph) -> Fraction:
    """Product of all vertex degrees divided by |U|*|V|, as an exact rational."""
    prod = 1
    for d in G.degrees():
        prod *= d
    return Fraction(prod, G.m * G.n)


def pendant_add(G: BipartiteGraph, v: int) -> BipartiteGraph:
    """Attach a new degree-1 vertex to ``v`` (combined 1-based index).

    The new vertex lands in the part opposite to ``v``: a new column when v
    is a row vertex, a new row otherwise.
    """
    if not 1 <= v <= G.m + G.n:
        raise ValueError("vertex %d out of range" % v)
    if v <= G.m:
        rows = list(G.rows)
        rows[v - 1] |= 1 << G.n
        return BipartiteGraph(G.m, G.n + 1, rows)
    j = v - G.m
    return BipartiteGraph(G.m + 1, G.n, list(G.rows) + [1 << (j - 1)])


def bridge_join(G: BipartiteGraph, G2: BipartiteGraph, x: int, x2: int) -> BipartiteGraph:
    """Disjoint union plus one edge between row vertex ``x`` of G and row
    vertex ``x2`` of G2.

    The joined graph has parts (U + V') and (V + U'): the second graph's
    parts swap sides so the bridge stays bipartite.  Row order is u_1..u_m
    then v'_1..v'_{n2}; column order v_1..v_n then u'_1..u'_{m2}.
    """
    if not 1 <= x <= G.m:
        raise ValueError("x must be a row vertex of the first graph")
    if not 1 <= x2 <= G2.m:
        raise ValueError("x2 must be a row vertex of the second graph")
    t2 = G2.transpose()  # rows of t2 are V'-vertices over columns U'
    rows = list(G.rows)  # width n, extended to n + m2
    rows[x - 1] |= 1 << (G.n + x2 - 1)
    new_rows = rows + [r << G.n for r in t2.rows]
    return BipartiteGraph(G.m + G2.n, G.n + G2.m, new_rows)


def parse_graph_file(text: str):
    """Parse the one-graph text format.

    Line 1 is "bipartite m n" or "general n"; later nonblank lines are
    edges: "e i j" (u_i ~ v_j) for bipartite, "i j" for general.
    """
    lines = text.splitlines()
    header = None
    ln = 0
    for ln, line in enumerate(lines, start=1):
        if line.strip():
            header = line.split()
            break
    if header is None:
        raise GraphFormatError("line 1: empty graph file")
    rest = lines[ln:]
    if header[0] == "bipartite":
        if len(header) != 3:
            raise GraphFormatError("line %d: expected 'bipartite m n'" % ln)
        try:
            m, n = int(header[1]), int(header[2])
        except ValueError:
            raise GraphFormatError("line %d: bad part sizes" % ln) from None
        edges = []
        for off, line in enumerate(rest, start=ln + 1):
            toks = line.split()
            if not toks:
                continue
            if len(toks) != 3 or toks[0] != "e":
                raise GraphFormatError("line %d: expected 'e i j'" % off)
            try:
                edges.append((int(toks[1]), int(toks[2])))
            except ValueError:
                raise GraphFormatError("line %d: bad edge indices" % off) from None
        try:
            return BipartiteGraph.from_edges(m, n, edges)
        except ValueError as exc:
            raise GraphFormatError("graph body: %s" % exc) from None
    if header[0] == "general":
        if len(header) != 2:
            raise GraphFormatError("line %d: expected 'general n'" % ln)
        try:
            n = int(header[1])
        except ValueError:
            raise GraphFormatError("line %d: bad vertex count" % ln) from None
        edges = []
        for off, line in enumerate(rest, start=ln + 1):
            toks = line.split()
            if not toks:
                continue
            if len(toks) != 2:
                raise GraphFormatError("line %d: expected 'i j'" % off)
            try:
                edges.append((int(toks[0]), int(toks[1])))
            except ValueError:
                raise GraphFormatError("line %d: bad edge indices" % off) from None
        try:
            return Graph(n, edges)
        except ValueError as exc:
            raise GraphFormatError("graph body: %s" % exc) from None
    raise GraphFormatError("line %d: unknown header %r" % (ln, header[0]))


def format_graph(G) -> str:
    """Serialize a graph in the format accepted by ``parse_graph_file``."""
    if isinstance(G, BipartiteGraph):
        lines = ["bipartite %d %d" % (G.m, G.n)]
        lines += ["e %d %d" % (i, j) for i, j in G.edges()]
    else:
        lines = ["general %d" % G.vcount]
        lines += ["%d %d" % (a, b) for a, b in G.sorted_edges()]
    return "\n".join(lines) + "\n"
