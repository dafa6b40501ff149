"""Integer partitions: conjugation, concatenation, majorization, Gale-Ryser.

Partitions are immutable value types.  Majorization accepts arbitrary real
sequences (graph spectra are floats); everything else is integer-exact.
"""

from __future__ import annotations

from fractions import Fraction

#: absolute tolerance for prefix-sum comparisons on floating sequences
MAJORIZATION_TOL = 1e-9


class Partition:
    """A nonincreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError("partition parts must be positive, got %r" % (p,))
            if i > 0 and parts[i - 1] < p:
                raise ValueError("partition parts must be nonincreasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __reduce__(self):
        return (Partition, (self.parts,))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse a comma-separated list like "5,5,4,2,2,1"; "" is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    def to_string(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition(%r)" % (self.parts,)


def conjugate(a: Partition) -> Partition:
    """Conjugate partition: part i counts the parts of ``a`` that are >= i."""
    if not len(a):
        return Partition(())
    width = a[0]
    counts = [0] * width
    for p in a:
        for i in range(p):
            counts[i] += 1
    return Partition(counts)


def concat(a, b) -> tuple:
    """Concatenation of two sequences; the result need not be nonincreasing."""
    return tuple(a) + tuple(b)


def _is_exact(seq) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in seq)


def majorizes(a, b, tol: float = MAJORIZATION_TOL) -> bool:
    """True iff ``a`` is majorized by ``b`` (written a < b in the literature).

    Every prefix sum of the nonincreasing rearrangement of ``a`` must be at
    most the corresponding prefix sum of ``b``, with equality for the full
    sum.  Sequences of unequal length are zero-padded to the longer one.
    Comparison is exact for int/Fraction entries, within ``tol`` otherwise.
    """
    a = sorted(a, reverse=True)
    b = sorted(b, reverse=True)
    length = max(len(a), len(b))
    a += [0] * (length - len(a))
    b += [0] * (length - len(b))
    exact = _is_exact(a) and _is_exact(b)
    sa = sb = 0
    for k in range(length):
        sa += a[k]
        sb += b[k]
        if exact:
            if sa > sb:
                return False
        elif sa > sb + tol:
            return False
    if exact:
        return sa == sb
    return abs(sa - sb) <= tol


def gale_ryser(a: Partition, b: Partition) -> bool:
    """True iff some bipartite graph has degree sequences ``a`` and ``b``.

    Realizability holds exactly when the sums agree and ``a`` is majorized
    by the conjugate of ``b``.
    """
    if a.size != b.size:
        return False
    return majorizes(a.parts, conjugate(b).parts)
