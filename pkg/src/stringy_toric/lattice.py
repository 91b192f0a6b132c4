"""Exact integer and rational linear algebra.

Vectors are plain tuples of Python ints (lattice points) or of ints and
:class:`fractions.Fraction` (rational points).  Nothing in this module
touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence


def as_number(x):
    """Return ``x`` as an int when it is integral, otherwise as a Fraction."""
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def as_vector(v) -> tuple:
    return tuple(as_number(x) for x in v)


def is_integral(v) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> tuple:
    return tuple(c * a for a in v)


def primitive(v) -> tuple:
    """Divide an integer vector by the gcd of its entries.

    >>> primitive((2, -4))
    (1, -2)
    """
    v = tuple(int(x) for x in v)
    g = gcd(*v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def integer_direction(v) -> tuple:
    """Primitive integer vector pointing in the direction of a rational vector."""
    den = lcm(*(Fraction(x).denominator for x in v))
    return primitive(int(Fraction(x) * den) for x in v)


def xgcd(a: int, b: int):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(rows: Sequence[Sequence[int]]):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  Nonzero rows
    of ``H`` come first, have positive pivots, and entries above a pivot are
    reduced into ``[0, pivot)``.  The nonzero rows form the canonical basis
    of the lattice generated by the rows of ``A``.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][j]
            if b == 0:
                continue
            a = A[r][j]
            g, x, y = xgcd(a, b)
            p, q = -b // g, a // g
            for M in (A, U):
                Rr, Ri = M[r], M[i]
                M[r] = [x * s + y * t for s, t in zip(Rr, Ri)]
                M[i] = [p * s + q * t for s, t in zip(Rr, Ri)]
        piv = A[r][j]
        if piv == 0:
            continue
        if piv < 0:
            A[r] = [-s for s in A[r]]
            U[r] = [-s for s in U[r]]
            piv = -piv
        for i in range(r):
            c = A[i][j] // piv
            if c:
                A[i] = [s - c * t for s, t in zip(A[i], A[r])]
                U[i] = [s - c * t for s, t in zip(U[i], U[r])]
        r += 1
    return [tuple(row) for row in A], [tuple(row) for row in U]


def hnf_basis(rows, dim: Optional[int] = None) -> tuple:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``rows``."""
    rows = list(rows)
    if not rows:
        return ()
    H, _ = hnf(rows)
    return tuple(h for h in H if any(h))


def integer_kernel(rows, dim: int) -> tuple:
    """Basis of the lattice ``{x in Z^dim : <r, x> = 0 for every row r}``.

    The kernel of an integer matrix is always saturated, so the result is a
    basis of the full lattice of integer solutions.
    """
    rows = [tuple(map(int, r)) for r in rows]
    if not rows:
        return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    At = [tuple(r[j] for r in rows) for j in range(dim)]
    H, U = hnf(At)
    kernel = [U[i] for i in range(dim) if not any(H[i])]
    return hnf_basis(kernel)


def det(matrix) -> Fraction | int:
    """Exact determinant (Bareiss for integer matrices, Gauss otherwise)."""
    M = [list(r) for r in matrix]
    n = len(M)
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in M for x in r):
        sign, prev = 1, 1
        for k in range(n - 1):
            if M[k][k] == 0:
                for i in range(k + 1, n):
                    if M[i][k] != 0:
                        M[k], M[i] = M[i], M[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return sign * M[n - 1][n - 1]
    M = [[Fraction(x) for x in r] for r in M]
    result = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            M[k], M[p] = M[p], M[k]
            result = -result
        result *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return as_number(result)


def _rref(rows):
    """Reduced row echelon form over Q; returns (R, pivot columns)."""
    R = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    m = len(R)
    n = len(R[0]) if m else 0
    r = 0
    for j in range(n):
        p = next((i for i in range(r, m) if R[i][j] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][j]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][j] != 0:
                f = R[i][j]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(j)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(rows) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(_rref(rows)[1])


def solve_rational(A, b) -> Optional[tuple]:
    """Some exact solution of ``A x = b``, or ``None`` when inconsistent.

    Free variables are set to zero, so a unique solution is returned exactly.
    """
    A = [list(r) for r in A]
    if not A:
        return None if any(b) else ()
    n = len(A[0])
    aug = [r + [bi] for r, bi in zip(A, b)]
    R, pivots = _rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, j in zip(R, pivots):
        x[j] = row[n]
    return as_vector(x)


def affine_rank(points) -> int:
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    return rank([vsub(p, p0) for p in points[1:]])


@dataclass(frozen=True)
class SublatticeBasis:
    """Basis of a saturated sublattice ``L = V ∩ Z^n`` of ``Z^n``."""

    basis: tuple
    ambient_dim: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v) -> Optional[tuple]:
        """Coordinates of ``v`` in this basis, or ``None`` if ``v ∉ span``."""
        if not self.basis:
            return () if not any(v) else None
        cols = [[b[i] for b in self.basis] for i in range(self.ambient_dim)]
        return solve_rational(cols, list(v))

    def __contains__(self, v) -> bool:
        c = self.coordinates(v)
        return c is not None and is_integral(c)

    def vector(self, coords) -> tuple:
        out = [0] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            for i, x in enumerate(b):
                out[i] += c * x
        return as_vector(out)


def saturated_basis(points, dim: Optional[int] = None) -> SublatticeBasis:
    """Basis of ``span(points) ∩ Z^dim``.

    Rational points are allowed; only their directions matter.
    """
    points = [integer_direction(p) for p in points if any(p)]
    if dim is None:
        if not points:
            raise ValueError("ambient dimension needed for an empty point set")
        dim = len(points[0])
    if not points:
        return SublatticeBasis((), dim)
    complement = integer_kernel(points, dim)
    return SublatticeBasis(integer_kernel(complement, dim), dim)


def orthogonal_lattice(vectors, dim: int) -> SublatticeBasis:
    """``{m in Z^dim : <m, v> = 0 for all v}`` as a saturated basis."""
    vectors = [integer_direction(v) for v in vectors if any(v)]
    return SublatticeBasis(integer_kernel(vectors, dim), dim)
