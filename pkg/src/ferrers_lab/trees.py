"""Spanning-tree counting, explicit enumeration, and the weighted tree polynomial.

The count comes from a Laplacian cofactor (exact, Bareiss); enumeration is
a deletion/contraction backtrack over the sorted edge list with a
connectivity prune, guarded by a budget.  The weighted polynomial assigns
each spanning tree the monomial prod x_i^{deg_T(u_i)} * prod y_j^{deg_T(v_j)}
and is available both brute-force and in product form for staircase graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .budget import DEFAULT_TREE_BUDGET, BudgetExceeded, budget_cap
from .exactla import det_int
from .graphs import BipartiteGraph, ferrers_invariant, laplacian
from .partitions import Partition, conjugate


class MultiPoly:
    """Multivariate polynomial with integer coefficients.

    Terms map fixed-arity exponent tuples to nonzero coefficients; iteration
    and serialization follow sorted exponent order, so equal polynomials
    have identical renderings.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ValueError("exponent vector has arity %d, expected %d"
                                 % (len(exps), arity))
            coeff = int(coeff)
            if coeff:
                clean[exps] = coeff
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    def __reduce__(self):
        return (MultiPoly, (self.arity, self.terms))

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def monomial(cls, arity: int, exps, coeff: int = 1) -> "MultiPoly":
        return cls(arity, {tuple(exps): coeff})

    @classmethod
    def variable_sum(cls, arity: int, indices) -> "MultiPoly":
        """Sum of single variables, e.g. x_a + x_b + ... (0-based slots)."""
        terms = {}
        for idx in indices:
            exps = [0] * arity
            exps[idx] = 1
            terms[tuple(exps)] = 1
        return cls(arity, terms)

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MultiPoly(self.arity, terms)

    def __mul__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultiPoly(self.arity, terms)

    def evaluate(self, values):
        """Evaluate at a full assignment (one value per slot)."""
        if len(values) != self.arity:
            raise ValueError("need %d values" % self.arity)
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                term *= v ** e
            total += term
        return total

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, tuple(self.sorted_terms())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "MultiPoly(arity=%d, terms=%d)" % (self.arity, len(self.terms))


@dataclass(frozen=True)
class TreeReport:
    """Spanning-tree count next to the degree-product invariant."""

    tau: int
    ferrers_invariant: Fraction
    ferrers_good: bool


def tau(G) -> int:
    """Number of spanning trees, via the (1,1) Laplacian cofactor.

    Exact for any vertex count >= 1; disconnected graphs give 0.
    """
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    if G.vcount < 1:
        raise ValueError("graph needs at least one vertex")
    lap = laplacian(G)
    minor = [row[1:] for row in lap[1:]]
    return det_int(minor)


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _spans(vcount, chosen, remaining):
    ds = _DisjointSet(vcount)
    comps = vcount
    for a, b in chosen:
        if ds.union(a, b):
            comps -= 1
    for a, b in remaining:
        if ds.union(a, b):
            comps -= 1
    return comps == 1


def enumerate_spanning_trees(G, budget: int | None = None) -> list:
    """All spanning trees as sorted edge tuples, each exactly once.

    Walks the sorted edge list deciding include/contract versus
    delete/skip, pruning branches that cannot stay spanning or would close
    a cycle.  Refuses up front when the tree count exceeds ``budget``.
    """
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    if not G.is_connected():
        raise ValueError("graph must be connected")
    budget = budget_cap(DEFAULT_TREE_BUDGET, budget)
    count = tau(G)
    if count > budget:
        raise BudgetExceeded(
            "graph has %d spanning trees, enumeration budget is %d" % (count, budget)
        )
    edges = G.sorted_edges()
    n = G.vcount
    trees = []
    chosen = []

    def walk(idx, ds, picked):
        if picked == n - 1:
            trees.append(tuple(chosen))
            return
        if idx == len(edges):
            return
        a, b = edges[idx]
        ra, rb = ds.find(a), ds.find(b)
        if ra != rb:
            nxt = _DisjointSet(0)
            nxt.parent = list(ds.parent)
            nxt.union(ra, rb)
            chosen.append(edges[idx])
            walk(idx + 1, nxt, picked + 1)
            chosen.pop()
        if _spans(n, chosen, edges[idx + 1:]):
            walk(idx + 1, ds, picked)

    walk(0, _DisjointSet(n), 0)
    trees.sort()
    if len(trees) != count:
        raise AssertionError("enumeration found %d trees, cofactor says %d"
                             % (len(trees), count))
    return trees


def sigma_bruteforce(G: BipartiteGraph, budget: int | None = None) -> MultiPoly:
    """Weighted tree polynomial by direct enumeration.

    Slot i (0-based) is x_{i+1} for i < m, and y_{i-m+1} after that.
    """
    arity = G.m + G.n
    trees = enumerate_spanning_trees(G.to_graph(), budget=budget)
    terms = {}
    for tree in trees:
        exps = [0] * arity
        for a, b in tree:
            exps[a - 1] += 1
            exps[b - 1] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly(arity, terms)


def sigma_formula(lmbda: Partition, lmbda_dual: Partition) -> MultiPoly:
    """Weighted tree polynomial of a connected staircase graph, in closed form.

    With row degrees lambda and column degrees lambda' (the conjugate), the
    polynomial factors as

        (x_1...x_m)(y_1...y_n)
        * prod_{p=2..m} (y_1 + ... + y_{lambda_p})
        * prod_{q=2..n} (x_1 + ... + x_{lambda'_q}),

    verified coefficient-for-coefficient against ``sigma_bruteforce``.
    The graph must be connected: lambda_1 = len(lambda') and
    lambda'_1 = len(lambda).
    """
    if conjugate(lmbda) != lmbda_dual:
        raise ValueError("second argument must be the conjugate of the first")
    m, n = len(lmbda), len(lmbda_dual)
    if lmbda[0] != n or lmbda_dual[0] != m:
        raise ValueError("partition does not describe a connected staircase graph")
    arity = m + n
    poly = MultiPoly.monomial(arity, [1] * arity)
    for p in range(1, m):
        poly = poly * MultiPoly.variable_sum(arity, [m + j for j in range(lmbda[p])])
    for q in range(1, n):
        poly = poly * MultiPoly.variable_sum(arity, list(range(lmbda_dual[q])))
    return poly


def tree_report(G: BipartiteGraph) -> TreeReport:
    """Bundle the exact tree count, degree-product invariant, and comparison."""
    t = tau(G)
    inv = ferrers_invariant(G)
    return TreeReport(tau=t, ferrers_invariant=inv, ferrers_good=t <= inv)
