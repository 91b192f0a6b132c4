"""Independent reference computations used to cross-check the library.

Nothing here calls into the hull, HNF or triangulation code under test:
facets come from brute-force hyperplanes through vertex subsets (sympy
nullspaces), lattice points from plain iteration, volumes from scipy's float
hull rounded against a known denominator.
"""

from fractions import Fraction
from itertools import combinations, product
from math import ceil, factorial, floor, gcd

import sympy
from scipy.spatial import ConvexHull


def brute_facets(points):
    """All supporting hyperplanes through d affinely independent points."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d = len(pts[0])
    found = set()
    for S in combinations(pts, d):
        M = sympy.Matrix([[1] + [sympy.Rational(x.numerator, x.denominator) for x in p] for p in S])
        ns = M.nullspace()
        if len(ns) != 1:
            continue
        v = ns[0]
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
        v = [int(x * den) for x in v]
        g = gcd(*v[1:])
        if g == 0:
            continue
        b, a = Fraction(-v[0], g), tuple(x // g for x in v[1:])
        for sign in (1, -1):
            aa, bb = tuple(sign * x for x in a), sign * b
            if all(sum(x * y for x, y in zip(aa, p)) >= bb for p in pts):
                found.add((aa, bb))
    return sorted(found)


def brute_lattice_points(points):
    facets = brute_facets(points)
    d = len(points[0])
    lo = [floor(min(Fraction(p[i]) for p in points)) for i in range(d)]
    hi = [ceil(max(Fraction(p[i]) for p in points)) for i in range(d)]
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(ai * xi for ai, xi in zip(a, x)) >= b for a, b in facets):
            out.append(x)
    return out


def float_normalized_volume(points, denominator=1):
    """``d! * vol`` from a float hull, snapped to the nearest multiple of
    ``1/denominator``."""
    d = len(points[0])
    vol = ConvexHull([[float(x) for x in p] for p in points]).volume * factorial(d)
    return Fraction(round(vol * denominator), denominator)


def sympy_det(M):
    return int(sympy.Matrix(M).det())


def brute_box_points(gens):
    """Lattice points ``sum l_i u_i`` with ``l_i`` in (0, 1], by scanning the
    bounding box of the parallelepiped and solving with sympy."""
    d = len(gens[0])
    corners = [
        [sum(c * g[i] for c, g in zip(cs, gens)) for i in range(d)]
        for cs in product((0, 1), repeat=len(gens))
    ]
    lo = [min(c[i] for c in corners) for i in range(d)]
    hi = [max(c[i] for c in corners) for i in range(d)]
    G = sympy.Matrix(gens).T
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        try:
            sol, params = G.gauss_jordan_solve(sympy.Matrix(x))
        except ValueError:
            continue
        if params.shape[0]:
            continue
        lam = [Fraction(int(sympy.fraction(s)[0]), int(sympy.fraction(s)[1])) for s in sol]
        if all(0 < l <= 1 for l in lam):
            out.append(tuple(x))
    return sorted(out)


def brute_hstar(counts, d):
    """h*-vector from Ehrhart counts by polynomial multiplication with (1-t)^(d+1)."""
    poly = [(-1) ** i * sympy.binomial(d + 1, i) for i in range(d + 2)]
    return tuple(
        int(sum(poly[i] * counts[j - i] for i in range(min(j, d + 1) + 1))) for j in range(d + 1)
    )


def float_euclidean_volume(points, denominator=1):
    """Euclidean volume from a float hull; 0 for degenerate point sets."""
    from scipy.spatial import QhullError

    d = len(points[0])
    try:
        nv = float_normalized_volume(points, denominator)
    except (QhullError, ValueError):
        return Fraction(0)
    return nv / factorial(d)


def brute_mixed_volume(vertex_lists, denominator=1):
    """Inclusion-exclusion over float volumes of Minkowski sums built from
    all pairwise vertex sums."""
    k = len(vertex_lists)
    total = Fraction(0)
    for size in range(1, k + 1):
        for S in combinations(vertex_lists, size):
            pts = [tuple(0 for _ in S[0][0])]
            for V in S:
                pts = {tuple(a + b for a, b in zip(p, v)) for p in pts for v in V}
            total += (-1) ** (k - size) * float_euclidean_volume(sorted(pts), denominator)
    return total
