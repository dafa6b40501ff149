"""Exact rational dense linear algebra.

Rationals are ``fractions.Fraction`` (always in lowest terms, positive
denominator).  Determinants run fraction-free (Bareiss) on an
integer-cleared copy; rationals appear only at the I/O boundary.  All
matrices are immutable after construction and sized for desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

#: exact rational scalar used throughout the package
BigRational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    def __reduce__(self):
        return (RatMatrix, (self.rows,))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls([[_ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls([[_ONE] * ncols for _ in range(nrows)])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "RatMatrix(%d x %d)" % (self.nrows, self.ncols)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return RatMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix([[c * x for x in row] for row in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def matvec(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.rows]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.rows)) if self.rows else [])

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def delete(self, drop_rows, drop_cols) -> "RatMatrix":
        """Submatrix with the given 0-based rows and columns removed."""
        drop_rows = set(drop_rows)
        drop_cols = set(drop_cols)
        return RatMatrix(
            [
                [x for j, x in enumerate(row) if j not in drop_cols]
                for i, row in enumerate(self.rows)
                if i not in drop_rows
            ]
        )


def det_int(rows) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Pivots on the first nonzero entry in column order; the empty matrix has
    determinant 1.
    """
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai, ak = a[i], a[k]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def det(a: RatMatrix) -> Fraction:
    """Exact determinant; rational entries are cleared row-wise first."""
    if a.nrows != a.ncols:
        raise ValueError("matrix is not square")
    denom = 1
    cleared = []
    for row in a.rows:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        denom *= mult
        cleared.append([int(x * mult) for x in row])
    return Fraction(det_int(cleared), denom)


def solve(a: RatMatrix, b) -> list:
    """Exact solution of ``a @ x = b`` for square nonsingular ``a``."""
    n = a.nrows
    if a.ncols != n:
        raise ValueError("matrix is not square")
    if len(b) != n:
        raise ValueError("right-hand side has wrong length")
    m = [list(row) + [Fraction(bi)] for row, bi in zip(a.rows, b)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mk = m[k]
        inv = 1 / mk[k]
        for j in range(k, n + 1):
            mk[j] *= inv
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                mr = m[r]
                for j in range(k, n + 1):
                    mr[j] -= f * mk[j]
    return [m[i][n] for i in range(n)]


def inverse(a: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    n = a.nrows
    if a.ncols != n:
        raise ValueError("matrix is not square")
    m = [list(row) + [_ONE if i == j else _ZERO for j in range(n)] for i, row in enumerate(a.rows)]
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mk = m[k]
        inv = 1 / mk[k]
        for j in range(k, 2 * n):
            mk[j] *= inv
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                mr = m[r]
                for j in range(k, 2 * n):
                    mr[j] -= f * mk[j]
    return RatMatrix([row[n:] for row in m])


@dataclass(frozen=True)
class GInverse:
    """A generalized inverse of a matrix, tagged by how it was built.

    ``kind`` is "moore_penrose" or "bordered(i)" with ``i`` the 1-based
    pivot vertex.  Construction verifies A @ G @ A == A exactly.
    """

    matrix: RatMatrix
    kind: str


def _check_ginverse(a: RatMatrix, g: RatMatrix):
    if (a @ g @ a) != a:
        raise ValueError("candidate is not a g-inverse (AGA != A)")


def moore_penrose_laplacian(laplacian: RatMatrix) -> GInverse:
    """Exact Moore-Penrose inverse of a connected-graph Laplacian.

    Uses the rank-correction identity (L + J/n)^{-1} - J/n, with J the
    all-ones matrix, then verifies the four defining conditions before
    returning.  A disconnected graph makes L + J/n singular.
    """
    n = laplacian.nrows
    if n == 0 or laplacian.ncols != n:
        raise ValueError("need a nonempty square matrix")
    jn = RatMatrix.ones(n, n).scale(Fraction(1, n))
    try:
        plus = inverse(laplacian + jn) - jn
    except ValueError:
        raise ValueError("Laplacian of a disconnected graph has no Moore-Penrose"
                         " inverse by the rank-correction identity") from None
    prod = laplacian @ plus
    prod2 = plus @ laplacian
    if (prod @ laplacian) != laplacian or (plus @ prod) != plus \
            or not prod.is_symmetric() or not prod2.is_symmetric():
        raise ValueError("Moore-Penrose conditions failed; input is not a"
                         " connected-graph Laplacian")
    return GInverse(plus, "moore_penrose")


def bordered_ginverse(laplacian: RatMatrix, i: int) -> GInverse:
    """G-inverse of a connected-graph Laplacian with row/column ``i`` zeroed.

    The principal submatrix with vertex ``i`` (1-based) removed is inverted
    and embedded back; the result H satisfies L @ H @ L == L.
    """
    n = laplacian.nrows
    if not 1 <= i <= n:
        raise ValueError("pivot vertex out of range")
    k = i - 1
    try:
        sub = inverse(laplacian.delete([k], [k]))
    except ValueError:
        raise ValueError("principal submatrix is singular (graph disconnected?)") from None
    rows = [[_ZERO] * n for _ in range(n)]
    for r in range(n - 1):
        rr = r if r < k else r + 1
        for c in range(n - 1):
            cc = c if c < k else c + 1
            rows[rr][cc] = sub[r, c]
    h = RatMatrix(rows)
    _check_ginverse(laplacian, h)
    return GInverse(h, "bordered(%d)" % i)


def format_rational(x: Fraction) -> str:
    """Serialize a rational as "p/q", omitting a unit denominator."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)
