"""Per-graph bound checkers tying the exact and spectral machinery together.

Every verdict that can be exact is exact: tree counts come from Laplacian
cofactors, degree products and densities stay rational, and the one
irrational bound (a square root) is decided by squaring both sides.  Only
genuinely floating data (Laplacian spectra) is compared with a tolerance,
and the tolerance is recorded in the report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import BipartiteGraph
from .partitions import Partition, concat, conjugate, gale_ryser, majorizes
from .spectral import TOL, laplacian_spectrum
from .trees import tau


@dataclass(frozen=True)
class BoundReport:
    """One lhs <= rhs comparison with its arithmetic mode spelled out.

    ``mode`` is "exact" or "tolerance"; with hypotheses-gated checks whose
    hypotheses fail, ``holds``/``equality`` are None and the notes say so.
    """

    name: str
    lhs: object
    rhs: object
    holds: bool | None
    equality: bool | None
    mode: str
    tol: float = 0.0
    notes: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        def render(x):
            if isinstance(x, Fraction):
                from .exactla import format_rational

                return format_rational(x)
            return x

        out = {
            "name": self.name,
            "lhs": render(self.lhs),
            "rhs": render(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "mode": self.mode,
        }
        if self.mode == "tolerance":
            out["tol"] = self.tol
        if self.notes:
            out["notes"] = {k: render(v) for k, v in self.notes.items()}
        return out


def _is_complete_bipartite(G: BipartiteGraph) -> bool:
    full = (1 << G.n) - 1
    return all(r == full for r in G.rows)


def bozkurt_check(G: BipartiteGraph) -> BoundReport:
    """Tree count against (product of all degrees) / (edge count), exact.

    Equality holds exactly for complete bipartite graphs; the structural
    test is recorded alongside the arithmetic one.
    """
    if G.m + G.n < 2:
        raise ValueError("need at least 2 vertices")
    t = tau(G)
    prod = 1
    for d in G.degrees():
        prod *= d
    e = G.edge_count()
    if e == 0:
        rhs = Fraction(0)
    else:
        rhs = Fraction(prod, e)
    return BoundReport(
        name="bozkurt",
        lhs=Fraction(t),
        rhs=rhs,
        holds=t <= rhs,
        equality=t == rhs,
        mode="exact",
        notes={"complete_bipartite": _is_complete_bipartite(G)},
    )


def venkataramana_check(G: BipartiteGraph) -> BoundReport:
    """Tree count against prod(d_i + 1/2) * prod(e_j + 1/2) * sqrt(e_1).

    Row vertices carry the d's, column vertices the e's, and e_1 is the
    largest column degree.  The verdict squares both sides so the square
    root never enters a comparison.
    """
    d_seq = sorted(G.degrees_u(), reverse=True)
    e_seq = sorted(G.degrees_v(), reverse=True)
    t = tau(G)
    factor = Fraction(1)
    for d in d_seq:
        factor *= d + Fraction(1, 2)
    for d in e_seq:
        factor *= d + Fraction(1, 2)
    e1 = e_seq[0]
    holds = Fraction(t) ** 2 <= factor ** 2 * e1
    equality = Fraction(t) ** 2 == factor ** 2 * e1
    return BoundReport(
        name="venkataramana",
        lhs=Fraction(t),
        rhs=float(factor) * e1 ** 0.5,
        holds=holds,
        equality=equality,
        mode="exact",
        notes={"rational_factor": factor, "sqrt_argument": e1},
    )


def majorization_chain_check(d: Partition, spectrum, a: Partition,
                             b: Partition) -> BoundReport:
    """Majorization-hypothesis product inequality on explicit sequences.

    Given a degree partition d split as the concatenation of a and b, and
    a positive nonincreasing real sequence one shorter than d: when a is
    majorized by the conjugate of b and d is majorized by the sequence,
    which is majorized by the conjugate of d, the scaled product of the
    sequence must not exceed the scaled product of the degrees.  Failed
    hypotheses withhold the verdict instead of reporting one.
    """
    n = len(d)
    spectrum = list(spectrum)
    if len(spectrum) != n - 1:
        raise ValueError(
            "sequence has %d entries, expected %d" % (len(spectrum), n - 1)
        )
    if sorted(concat(a, b), reverse=True) != list(d.parts):
        raise ValueError("d must be the sorted concatenation of a and b")
    hypotheses = {
        "gale_ryser": gale_ryser(a, b),
        "degrees_below_sequence": majorizes(list(d.parts), spectrum),
        "sequence_below_conjugate": majorizes(spectrum, list(conjugate(d).parts)),
    }
    p, q = len(a), len(b)
    rhs_exact = Fraction(1, p * q)
    for x in d.parts:
        rhs_exact *= x
    if not all(hypotheses.values()):
        return BoundReport(
            name="majorization_chain",
            lhs=None,
            rhs=None,
            holds=None,
            equality=None,
            mode="tolerance",
            tol=TOL,
            notes={"status": "hypotheses not met", **hypotheses},
        )
    lhs = 1.0 / n
    for x in spectrum:
        lhs *= x
    rhs = float(rhs_exact)
    return BoundReport(
        name="majorization_chain",
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + TOL,
        equality=abs(lhs - rhs) <= TOL,
        mode="tolerance",
        tol=TOL,
        notes={"rhs_exact": rhs_exact, **hypotheses},
    )


def graph_majorization_instance(G: BipartiteGraph):
    """The (d, spectrum, a, b) tuple of a connected bipartite graph.

    d is the full degree partition, the sequence is the Laplacian spectrum
    with the trailing zero eigenvalue dropped, and a, b are the two part
    degree sequences.
    """
    if not G.is_connected():
        raise ValueError("graph must be connected")
    a = Partition(sorted(G.degrees_u(), reverse=True))
    b = Partition(sorted(G.degrees_v(), reverse=True))
    d = Partition(sorted(G.degrees(), reverse=True))
    spectrum = laplacian_spectrum(G)[:-1]
    return d, spectrum, a, b


def grone_merris_check(G) -> BoundReport:
    """Laplacian spectrum majorized by the conjugate degree sequence.

    A theorem, so it should always hold; checked within the floating
    tolerance because the spectrum is floating.
    """
    if isinstance(G, BipartiteGraph):
        G = G.to_graph()
    spectrum = laplacian_spectrum(G)
    degs = [d for d in G.degrees() if d > 0]
    dual = conjugate(Partition(sorted(degs, reverse=True))) if degs else Partition(())
    ok = majorizes(spectrum, list(dual.parts))
    return BoundReport(
        name="grone-merris",
        lhs=spectrum,
        rhs=list(dual.parts),
        holds=ok,
        equality=None,
        mode="tolerance",
        tol=TOL,
        notes={"comparison": "prefix sums of spectrum vs conjugate degrees"},
    )


def ferrers_bound_check(G: BipartiteGraph) -> BoundReport:
    """Tree count against the degree-product invariant, fully exact.

    The floating spectral product that would appear on the left is
    replaced by the exact tree count they equal, so no rounding can
    produce a spurious counterexample.  Disconnected graphs hold
    trivially (tree count zero).
    """
    t = tau(G)
    prod = 1
    for d in G.degrees():
        prod *= d
    rhs = Fraction(prod, G.m * G.n)
    return BoundReport(
        name="eq3",
        lhs=Fraction(t),
        rhs=rhs,
        holds=t <= rhs,
        equality=t == rhs,
        mode="exact",
        notes={"p": G.m, "q": G.n},
    )
