"""Double description, face lattices and pulling triangulations.

Everything operates on integer data.  Rational inputs are scaled row by row
before they reach :func:`extreme_rays`, which is harmless because every row
stands for a homogeneous inequality.
"""

from fractions import Fraction
from math import gcd, lcm

from .lattice import as_number, dot, rank, vsub


def _primitive_or_zero(v):
    g = gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _integer_row(row):
    den = lcm(*(Fraction(x).denominator for x in row))
    return tuple(int(Fraction(x) * den) for x in row)


def extreme_rays(rows, n: int) -> list:
    """Extreme rays of the pointed cone ``{x in R^n : <row, x> >= 0}``.

    ``rows`` must have rank ``n``.  Returns primitive integer vectors.
    Adjacency in the incremental step is decided combinatorially from
    zero sets, which is exact as long as only extreme rays are kept.
    """
    rows = [_integer_row(r) for r in rows]
    chosen = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in chosen] + [r]) > len(chosen):
            chosen.append(i)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise ValueError("inequality system does not define a pointed cone")

    # Initial simplicial cone: columns of the inverse of the chosen rows.
    B = [[Fraction(x) for x in rows[i]] for i in chosen]
    inv = _inverse(B)
    rays, zeros = [], []
    for j in range(n):
        col = [inv[i][j] for i in range(n)]
        den = lcm(*(c.denominator for c in col))
        rays.append(_primitive_or_zero([int(c * den) for c in col]))
        zeros.append(sum(1 << chosen[k] for k in range(n) if k != j))

    remaining = [i for i in range(len(rows)) if i not in set(chosen)]
    for k in remaining:
        a = rows[k]
        vals = [dot(a, r) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        new_rays, new_zeros = [], []
        for i, s in enumerate(vals):
            if s >= 0:
                new_rays.append(rays[i])
                new_zeros.append(zeros[i] | (1 << k) if s == 0 else zeros[i])
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if bin(common).count("1") < n - 2:
                    continue
                if any(
                    t != p and t != q and zeros[t] & common == common
                    for t in range(len(rays))
                ):
                    continue
                r = [vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(_primitive_or_zero(r))
                new_zeros.append(common | (1 << k))
        rays, zeros = new_rays, new_zeros
    return rays


def _inverse(M):
    n = len(M)
    A = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [r[n:] for r in A]


def facet_inequalities(points) -> list:
    """Facets ``(normal, offset)`` with ``<normal, x> >= offset`` of a
    full-dimensional point configuration.  Normals are primitive integer
    vectors; offsets are exact rationals.
    """
    points = list(points)
    d = len(points[0])
    rows = [(1,) + tuple(p) for p in points]
    out = []
    for ray in extreme_rays(rows, d + 1):
        b, a = ray[0], ray[1:]
        g = gcd(*a)
        if g == 0:
            raise ValueError("point configuration is not full-dimensional")
        out.append((tuple(x // g for x in a), as_number(Fraction(-b, g))))
    return sorted(out)


def cone_facet_normals(generators) -> list:
    """Primitive inner facet normals of a full-dimensional pointed cone."""
    d = len(generators[0])
    return sorted(extreme_rays(generators, d))


def close_under_intersection(top: frozenset, facets) -> set:
    """All nonempty intersections of facet sets, together with ``top``."""
    faces = {top}
    frontier = [frozenset(f) for f in facets]
    facets = [frozenset(f) for f in facets]
    while frontier:
        nxt = []
        for G in frontier:
            if G and G not in faces:
                faces.add(G)
                nxt.extend(G & F for F in facets if not G <= F)
        frontier = nxt
    return faces


def pulling_triangulation(top, faces_by_dim, cone=False, key=None):
    """Pulling triangulation of a polytope or a pointed cone.

    ``faces_by_dim`` maps each dimension to the faces (frozensets of vertex
    or ray labels) of that dimension.  A ``k``-face is a simplex when it has
    ``k + 1`` vertices, or ``k`` rays when ``cone`` is set.  The label that
    is smallest under ``key`` is pulled first.  The result restricts to the
    pulling triangulation of every face, so triangulating the cones of a fan
    one by one with a common ``key`` yields a fan.
    """
    key = key or (lambda x: x)
    dim_of = {F: k for k, fs in faces_by_dim.items() for F in fs}
    extra = 0 if cone else 1
    cache = {}

    def tri(G):
        if G in cache:
            return cache[G]
        k = dim_of[G]
        if len(G) == k + extra:
            res = [G]
        else:
            v = min(G, key=key)
            res = [
                S | {v}
                for F in faces_by_dim.get(k - 1, ())
                if F < G and v not in F
                for S in tri(F)
            ]
        cache[G] = res
        return res

    return tri(frozenset(top))


def affine_dims(faces, coords) -> dict:
    """Dimension of each face (a frozenset of indices into ``coords``)."""
    out = {}
    for F in faces:
        pts = [coords[i] for i in sorted(F)]
        out[F] = rank([vsub(p, pts[0]) for p in pts[1:]])
    return out
