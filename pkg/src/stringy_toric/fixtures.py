"""Standard small polytopes and the reflexive polygon search."""

from functools import cmp_to_key
from itertools import product
from math import gcd

from .lattice import hnf
from .polytope import Polytope, translate

F1 = Polytope([(1, 0), (0, 1), (-1, -1)])
F2 = Polytope([(1, 0), (0, 1), (-1, -2)])
F3 = Polytope([(1, 0), (0, 1), (-1, -3)])
F4 = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
F5 = Polytope([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1)])
F7 = Polytope([(1, 0), (0, 1), (-1, 0), (0, -1)])
C3 = Polytope(list(product((-1, 1), repeat=3)))
C4 = Polytope(list(product((-1, 1), repeat=4)))
OCTAHEDRON = C3.dual


def simplex(d: int, k: int = 1) -> Polytope:
    """``k`` times the unit simplex ``conv(0, e_1, ..., e_d)``."""
    pts = [(0,) * d] + [tuple(k * int(i == j) for j in range(d)) for i in range(d)]
    return Polytope(pts)


def reflexive_simplex(d: int) -> Polytope:
    """``(d+1)`` times the unit simplex, shifted to put ``(1,...,1)`` at 0."""
    return translate(simplex(d, d + 1), (-1,) * d)


def prism(P: Polytope, length: int = 1) -> Polytope:
    """``[0, length] x P``."""
    return Polytope([(a,) + v for a in (0, length) for v in P.vertices])


def cartesian_product(P: Polytope, Q: Polytope) -> Polytope:
    return Polytope([p + q for p in P.vertices for q in Q.vertices])


F6 = prism(simplex(3, 2))

NAMED = {
    "F1": F1,
    "F2": F2,
    "F3": F3,
    "F4": F4,
    "F5": F5,
    "F6": F6,
    "F7": F7,
    "C3": C3,
    "C4": C4,
    "octahedron": OCTAHEDRON,
}


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _height_one(u, v):
    """The edge ``[u, v]`` lies at lattice distance 1 from the origin, i.e.
    the triangle ``(0, u, v)`` has no lattice points off that edge besides 0."""
    d = _det(u, v)
    return d > 0 and d == gcd(v[0] - u[0], v[1] - u[1])


def _left_turn(a, b, c):
    return _det((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) > 0


def _cycles(bound: int):
    pts = [
        p
        for p in product(range(-bound, bound + 1), repeat=2)
        if p != (0, 0) and gcd(*p) == 1
    ]
    pts.sort(key=cmp_to_key(_angle_cmp))
    pos = {p: i for i, p in enumerate(pts)}

    def extend(path):
        first, last = path[0], path[-1]
        if len(path) >= 3 and _height_one(last, first):
            if _left_turn(path[-2], last, first) and _left_turn(last, first, path[1]):
                yield tuple(path)
        for q in pts[pos[last] + 1 :]:
            if _height_one(last, q) and (len(path) < 2 or _left_turn(path[-2], last, q)):
                path.append(q)
                yield from extend(path)
                path.pop()

    for p in pts:
        yield from extend([p])


def normal_form(vertices) -> tuple:
    """Invariant of a lattice polygon under unimodular maps fixing 0: the
    least Hermite normal form of the coordinate matrix over all cyclic
    orderings of the vertices in either direction."""
    vs = list(vertices)
    n = len(vs)
    best = None
    for seq in (vs, vs[::-1]):
        for s in range(n):
            order = seq[s:] + seq[:s]
            H, _ = hnf([[v[0] for v in order], [v[1] for v in order]])
            key = tuple(H)
            if best is None or key < best:
                best = key
    return best


def reflexive_polygons(bound: int = 4) -> list:
    """Representatives of the distinct reflexive polygons with vertices in
    ``[-bound, bound]^2``, up to unimodular equivalence."""
    seen = {}
    for cyc in _cycles(bound):
        key = normal_form(cyc)
        if key not in seen:
            seen[key] = Polytope(cyc)
    return sorted(seen.values(), key=lambda P: (P.n_vertices, P.vertices))


def fixture_fans():
    """Face fans of the named fixtures, by name."""
    from .fan import face_fan

    return {
        name: face_fan(P)
        for name, P in NAMED.items()
        if name != "F6"
    }
