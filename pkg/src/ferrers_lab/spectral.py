"""Floating-point spectral quantities and bound checks.

Eigenvalues come from a cyclic Jacobi rotation solver (dimensions here
stay around twenty, where Jacobi is simple, dependency-free and accurate).
Adjacency spectral radius is computed through the m x m Gram matrix B B'
of the biadjacency matrix, halving the dimension and keeping the computed
square nonnegative.  Verdicts that can be exact (density comparisons) use
rationals; everything floating carries an explicit tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import BipartiteGraph, laplacian, normalized_laplacian

#: default absolute tolerance for floating comparisons in reports
TOL = 1e-9

_JACOBI_SWEEPS = 100
_JACOBI_EPS = 1e-13


def jacobi_eigh(matrix):
    """Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvalues nonincreasing and
    eigenvectors as a list of vectors aligned with them.  Sweeps rotate
    every off-diagonal pair until the off-diagonal Frobenius norm falls
    below 1e-13 relative to the input norm, capped at 100 sweeps.
    """
    n = len(matrix)
    a = [[float(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > 1e-12 * (1.0 + abs(a[i][j])):
                raise ValueError("matrix is not symmetric")
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    norm = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n)))
    thresh = _JACOBI_EPS * max(1.0, norm)
    for _ in range(_JACOBI_SWEEPS):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    pairs = sorted(
        ((a[i][i], [v[k][i] for k in range(n)]) for i in range(n)),
        key=lambda kv: -kv[0],
    )
    return [p[0] for p in pairs], [p[1] for p in pairs]


def eigen_residual(matrix, value, vector) -> float:
    """Euclidean norm of A x - lambda x for one reported eigenpair."""
    n = len(matrix)
    res = 0.0
    for i in range(n):
        r = sum(matrix[i][j] * vector[j] for j in range(n)) - value * vector[i]
        res += r * r
    return math.sqrt(res)


def _max_residual(matrix, values, vectors) -> float:
    return max(
        (eigen_residual(matrix, w, x) for w, x in zip(values, vectors)),
        default=0.0,
    )


@dataclass(frozen=True)
class SpectrumReport:
    lambda_max: float
    laplacian_spectrum: list
    normalized_spectrum: list
    residual: float


def _gram(G: BipartiteGraph):
    return [
        [
            (G.rows[i] & G.rows[j]).bit_count()
            for j in range(G.m)
        ]
        for i in range(G.m)
    ]


def spectral_radius(G: BipartiteGraph) -> float:
    """Largest adjacency eigenvalue, as sqrt of the top Gram eigenvalue."""
    if G.edge_count() == 0:
        return 0.0
    values, _ = jacobi_eigh(_gram(G))
    return math.sqrt(max(values[0], 0.0))


def laplacian_spectrum(G) -> list:
    """Laplacian eigenvalues, nonincreasing."""
    values, _ = jacobi_eigh(laplacian(G))
    return values


def normalized_spectrum(G) -> list:
    """Normalized-Laplacian eigenvalues of a connected graph, nonincreasing."""
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    if not G.is_connected():
        raise ValueError("normalized spectrum requires a connected graph")
    values, _ = jacobi_eigh(normalized_laplacian(G))
    return values


def spectrum_report(G: BipartiteGraph) -> SpectrumReport:
    """All three spectra plus the worst eigenpair reconstruction residual."""
    gram = _gram(G)
    gvals, gvecs = jacobi_eigh(gram)
    lap = laplacian(G)
    lvals, lvecs = jacobi_eigh(lap)
    nlap = normalized_laplacian(G)
    nvals, nvecs = jacobi_eigh(nlap)
    residual = max(
        _max_residual(gram, gvals, gvecs),
        _max_residual(lap, lvals, lvecs),
        _max_residual(nlap, nvals, nvecs),
    )
    return SpectrumReport(
        lambda_max=math.sqrt(max(gvals[0], 0.0)) if G.edge_count() else 0.0,
        laplacian_spectrum=lvals,
        normalized_spectrum=nvals,
        residual=residual,
    )


@dataclass(frozen=True)
class BoundCheck:
    """One floating bound comparison with its tolerance spelled out."""

    name: str
    lhs: float
    rhs: float
    holds: bool
    tight: bool
    tol: float
    notes: dict = field(default_factory=dict)


def sqrt_edge_bound_check(G: BipartiteGraph) -> BoundCheck:
    """Adjacency spectral radius against sqrt(edge count).

    The bound always holds; it is tight exactly on complete bipartite
    graphs (possibly with isolated vertices).
    """
    lhs = spectral_radius(G)
    rhs = math.sqrt(G.edge_count())
    tol = 1e-8
    if lhs > rhs + tol:
        raise AssertionError(
            "spectral radius %.12g exceeds sqrt(e) %.12g" % (lhs, rhs)
        )
    return BoundCheck(
        name="sqrt_edge_bound",
        lhs=lhs,
        rhs=rhs,
        holds=True,
        tight=abs(lhs - rhs) <= tol,
        tol=tol,
    )


def normalized_product_check(G: BipartiteGraph) -> BoundCheck:
    """Product of the vcount-2 middle normalized eigenvalues against density.

    For connected bipartite graphs the spectrum runs from the top value 2
    down to a single 0; the product spans everything strictly between.
    Through tau = (prod(deg)/sum(deg)) * prod(nonzero mu) this comparison
    is the tree-count-vs-degree-product bound in spectral form, with
    equality on staircase graphs.  The density e/(m*n) is exact and is
    rounded to float only for the comparison (nearest double).
    """
    total = G.m + G.n
    if total < 3:
        raise ValueError("need at least 3 vertices")
    mu = normalized_spectrum(G)
    product = 1.0
    for x in mu[1: total - 1]:
        product *= x
    rho = Fraction(G.edge_count(), G.m * G.n)
    return BoundCheck(
        name="normalized_product",
        lhs=product,
        rhs=float(rho),
        holds=product <= float(rho) + TOL,
        tight=abs(product - float(rho)) <= TOL,
        tol=TOL,
        notes={"rho": rho},
    )


def reflected_product_check(G: BipartiteGraph, k: int) -> BoundCheck:
    """Product of mu_i(2 - mu_i) over the k largest eigenvalues vs density.

    Bipartite normalized spectra are symmetric about 1, so 2 - mu is the
    reflection of mu.  When the product stays below the density this is a
    sufficient certificate that the tree count respects the degree-product
    invariant.  Requires 1 <= k <= floor((vcount-1)/2).
    """
    total = G.m + G.n
    if total < 3:
        raise ValueError("need at least 3 vertices")
    if not 1 <= k <= (total - 1) // 2:
        raise ValueError("k=%d out of range 1..%d" % (k, (total - 1) // 2))
    mu = normalized_spectrum(G)
    product = 1.0
    for x in mu[:k]:
        product *= x * (2.0 - x)
    rho = Fraction(G.edge_count(), G.m * G.n)
    return BoundCheck(
        name="reflected_product",
        lhs=product,
        rhs=float(rho),
        holds=product <= float(rho) + TOL,
        tight=abs(product - float(rho)) <= TOL,
        tol=TOL,
        notes={"rho": rho, "k": k},
    )


def dense_cut_vertex_hypothesis(G: BipartiteGraph) -> bool:
    """True iff density >= 0.544 and some cut vertex has degree exactly 2.

    Density is compared exactly (544/1000); the cut test removes each
    degree-2 vertex and looks for a component split.
    """
    rho = Fraction(G.edge_count(), G.m * G.n)
    if rho < Fraction(544, 1000):
        return False
    graph = G.to_graph()
    degs = graph.degrees()
    return any(
        degs[v - 1] == 2 and graph.is_cut_vertex(v)
        for v in range(1, graph.vcount + 1)
    )
