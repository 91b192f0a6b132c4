"""Complete rational polyhedral fans and torus-invariant divisors on them."""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .hull import close_under_intersection, cone_facet_normals, extreme_rays, pulling_triangulation
from .lattice import (
    as_number,
    as_vector,
    dot,
    integer_direction,
    orthogonal_lattice,
    primitive,
    rank,
    solve_rational,
    vscale,
)
from .polytope import Polytope, origin_is_interior


@dataclass(frozen=True)
class Cone:
    rays: frozenset
    dim: int

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == self.dim


class Fan:
    """A complete fan given by primitive rays and maximal cones.

    ``max_cones`` lists each maximal cone as a collection of indices into
    ``rays``.  All cones of the fan are derived from the face lattices of the
    maximal cones.  Construction fails unless the fan is complete.
    """

    def __init__(self, rays, max_cones):
        rays = [primitive(r) for r in rays]
        if len(set(rays)) != len(rays):
            raise ValueError("rays must be pairwise distinct")
        if not rays:
            raise ValueError("a fan needs rays")
        self.rays = tuple(rays)
        self.dim = len(rays[0])
        cones = sorted({frozenset(c) for c in max_cones}, key=sorted)
        self.max_cones = tuple(cones)

        self.cone_normals = {}
        self._faces_of = {}
        by_dim = {k: set() for k in range(self.dim + 1)}
        for sigma in cones:
            gens = [self.rays[i] for i in sorted(sigma)]
            if rank(gens) != self.dim:
                raise ValueError("fan not complete: maximal cone is not full-dimensional")
            normals = cone_facet_normals(gens)
            inc = [frozenset(i for i in sigma if dot(a, self.rays[i]) == 0) for a in normals]
            faces = close_under_intersection(sigma, inc) | {frozenset()}
            dims = {F: rank([self.rays[i] for i in F]) for F in faces}
            if any(dims.get(frozenset({i})) != 1 for i in sigma):
                raise ValueError("cone generators are not all extreme rays")
            self.cone_normals[sigma] = tuple(normals)
            self._faces_of[sigma] = dims
            for F, k in dims.items():
                by_dim[k].add(F)
        self._cones = {
            k: tuple(Cone(F, k) for F in sorted(fs, key=sorted)) for k, fs in by_dim.items()
        }
        self._dim_of = {c.rays: c.dim for cs in self._cones.values() for c in cs}
        used = set().union(*cones)
        if used != set(range(len(rays))):
            raise ValueError("every ray must lie in some maximal cone")
        self._check_complete()

    def __repr__(self):
        return f"Fan({len(self.rays)} rays, {len(self.max_cones)} maximal cones)"

    def __eq__(self, other):
        return (
            isinstance(other, Fan)
            and self.rays == other.rays
            and self.max_cones == other.max_cones
        )

    def __hash__(self):
        return hash((self.rays, self.max_cones))

    # structure ----------------------------------------------------------

    def cones(self, k: Optional[int] = None):
        if k is None:
            return {j: list(cs) for j, cs in self._cones.items()}
        return list(self._cones.get(k, ()))

    def cone(self, rays) -> Cone:
        key = frozenset(rays)
        if key not in self._dim_of:
            raise ValueError("ray set is not a cone of the fan")
        return Cone(key, self._dim_of[key])

    def generators(self, cone) -> list:
        ids = cone.rays if isinstance(cone, Cone) else cone
        return [self.rays[i] for i in sorted(ids)]

    def star(self, cone) -> list:
        """Maximal cones containing ``cone``."""
        ids = cone.rays if isinstance(cone, Cone) else frozenset(cone)
        return [s for s in self.max_cones if ids <= s and ids in self._faces_of[s]]

    @property
    def is_simplicial(self) -> bool:
        return all(len(s) == self.dim for s in self.max_cones)

    def faces_of(self, sigma) -> dict:
        """Face lattice of a maximal cone as ``{dim: [ray sets]}``."""
        out = {}
        for F, k in self._faces_of[frozenset(sigma)].items():
            out.setdefault(k, []).append(F)
        return out

    def max_cone_containing(self, n) -> frozenset:
        for s in self.max_cones:
            if all(dot(a, n) >= 0 for a in self.cone_normals[s]):
                return s
        raise ValueError("point not covered by the fan")

    @property
    def walls(self) -> dict:
        """Each ``(d-1)``-cone mapped to the maximal cones containing it."""
        out = {}
        for c in self._cones.get(self.dim - 1, ()):
            out[c.rays] = tuple(self.star(c))
        return out

    def _check_complete(self):
        d = self.dim
        walls = self.walls
        adj = {s: [] for s in self.max_cones}
        for w, nbrs in walls.items():
            if len(nbrs) != 2:
                raise ValueError("fan not complete: a wall lies in %d maximal cones" % len(nbrs))
            u = orthogonal_lattice(self.generators(w), d).basis[0]
            sides = []
            for s in nbrs:
                outside = next(i for i in s if i not in w)
                sides.append(dot(u, self.rays[outside]))
            if sides[0] * sides[1] >= 0:
                raise ValueError("fan not complete: neighbouring cones overlap")
            adj[nbrs[0]].append(nbrs[1])
            adj[nbrs[1]].append(nbrs[0])
        seen, todo = {self.max_cones[0]}, deque([self.max_cones[0]])
        while todo:
            for t in adj[todo.popleft()]:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        if len(seen) != len(self.max_cones):
            raise ValueError("fan not complete: maximal cones are not connected")
        p = [sum(c) for c in zip(*self.generators(self.max_cones[0]))]
        hits = sum(
            all(dot(a, p) >= 0 for a in self.cone_normals[s]) for s in self.max_cones
        )
        if hits != 1:
            raise ValueError("fan not complete: maximal cones overlap")


@dataclass(frozen=True)
class TorusDivisor:
    """``D = sum a_rho D_rho`` with one rational coefficient per ray."""

    coefficients: tuple
    name: str = field(default="D", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", as_vector(self.coefficients))

    def __add__(self, other):
        return TorusDivisor(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            f"{self.name}+{other.name}",
        )

    def scaled(self, c):
        return TorusDivisor(vscale(c, self.coefficients), f"{c}*{self.name}")

    @classmethod
    def anticanonical(cls, fan: Fan):
        return cls((1,) * len(fan.rays), "-K")

    @classmethod
    def prime(cls, fan: Fan, ray_index: int):
        return cls(tuple(int(i == ray_index) for i in range(len(fan.rays))), f"D{ray_index}")


@dataclass(frozen=True)
class PLFunction:
    """Piecewise linear function given by a covector on each maximal cone."""

    fan: Fan
    covectors: dict

    def __call__(self, n):
        return as_number(dot(self.covectors[self.fan.max_cone_containing(n)], n))

    def covector(self, cone) -> tuple:
        """Covector on any maximal cone containing ``cone``."""
        ids = cone.rays if isinstance(cone, Cone) else frozenset(cone)
        return self.covectors[self.fan.star(ids)[0]]


def support_covectors(fan: Fan, D: TorusDivisor, error="not Q-Cartier") -> PLFunction:
    """Covectors ``m_sigma`` with ``<m_sigma, u_rho> = -a_rho`` on each maximal cone."""
    if len(D.coefficients) != len(fan.rays):
        raise ValueError("divisor needs one coefficient per ray")
    out = {}
    for s in fan.max_cones:
        ids = sorted(s)
        m = solve_rational(
            [fan.rays[i] for i in ids], [-D.coefficients[i] for i in ids]
        )
        if m is None:
            raise ValueError(error)
        out[s] = m
    return PLFunction(fan, out)


def canonical_kappa(fan: Fan) -> PLFunction:
    """The piecewise linear function equal to ``-1`` on every ray."""
    return support_covectors(fan, TorusDivisor.anticanonical(fan), "not Q-Gorenstein")


def gorenstein_index(fan: Fan) -> int:
    kappa = canonical_kappa(fan)
    return lcm(*(Fraction(x).denominator for m in kappa.covectors.values() for x in m))


def is_cartier(fan: Fan, D: TorusDivisor) -> bool:
    try:
        plf = support_covectors(fan, D)
    except ValueError:
        return False
    return all(Fraction(x).denominator == 1 for m in plf.covectors.values() for x in m)


def face_fan(P: Polytope) -> Fan:
    if not origin_is_interior(P):
        raise ValueError("face fan needs the origin in the interior")
    rays = [integer_direction(v) for v in P.vertices]
    return Fan(rays, P.incidences)


def normal_fan(P: Polytope) -> Fan:
    if not P.is_full_dimensional:
        raise ValueError("normal fan needs a full-dimensional polytope")
    normals = [a for a, _ in P.facets]
    cones = [
        [j for j, inc in enumerate(P.incidences) if i in inc] for i in range(P.n_vertices)
    ]
    return Fan(normals, cones)


def polytope_divisor(P: Polytope):
    """Normal fan of ``P`` with the divisor whose polytope is ``P``."""
    fan = normal_fan(P)
    return fan, TorusDivisor(tuple(-b for _, b in P.facets), "D_P")


def simplicial_subdivision(fan: Fan, order=None) -> Fan:
    """Pulling triangulation of every maximal cone, with rays pulled in
    ``order`` (default: ray-table order).  No rays are added."""
    if fan.is_simplicial:
        return fan
    rank_of = {r: i for i, r in enumerate(order)} if order is not None else None
    key = (lambda i: rank_of[i]) if rank_of else None
    pieces = []
    for s in fan.max_cones:
        faces = fan.faces_of(s)
        faces.pop(0, None)
        pieces.extend(pulling_triangulation(s, faces, cone=True, key=key))
    return Fan(fan.rays, pieces)


def divisor_polytope(fan: Fan, D: TorusDivisor) -> Polytope:
    """``{y : <y, u_rho> >= -a_rho for every ray}``."""
    rows = [(a,) + u for a, u in zip(D.coefficients, fan.rays)]
    rows.append((1,) + (0,) * fan.dim)
    verts = [
        tuple(Fraction(x, r[0]) for x in r[1:]) for r in extreme_rays(rows, fan.dim + 1) if r[0] > 0
    ]
    if not verts:
        raise ValueError("divisor polytope is empty")
    return Polytope(verts, lattice="M")


def divisor_face(fan: Fan, D: TorusDivisor, cone, polytope: Optional[Polytope] = None):
    """Face of the divisor polytope where every ray of ``cone`` is tight,
    or ``None`` when that face is empty."""
    P = polytope if polytope is not None else divisor_polytope(fan, D)
    ids = cone.rays if isinstance(cone, Cone) else frozenset(cone)
    tight = [
        v
        for v in P.vertices
        if all(dot(v, fan.rays[i]) == -D.coefficients[i] for i in ids)
    ]
    return Polytope(tight, lattice="M") if tight else None


def _convexity(fan, D):
    plf = support_covectors(fan, D)
    for s in fan.max_cones:
        m = plf.covectors[s]
        for i, u in enumerate(fan.rays):
            if i not in s:
                yield dot(m, u) + D.coefficients[i]


def is_semiample(fan: Fan, D: TorusDivisor) -> bool:
    return all(x >= 0 for x in _convexity(fan, D))


def is_ample(fan: Fan, D: TorusDivisor) -> bool:
    return all(x > 0 for x in _convexity(fan, D))


def wall_coefficient(fan: Fan, D: TorusDivisor, wall, plf: Optional[PLFunction] = None):
    """``l`` with ``m' - m'' = l * u`` across a wall, where ``u`` is the
    primitive covector vanishing on the wall, nonpositive on the first
    neighbour and nonnegative on the second."""
    ids = wall.rays if isinstance(wall, Cone) else frozenset(wall)
    nbrs = fan.walls.get(ids)
    if nbrs is None or len(nbrs) != 2:
        raise ValueError("not a wall")
    plf = plf or support_covectors(fan, D)
    first, second = nbrs
    u = orthogonal_lattice(fan.generators(ids), fan.dim).basis[0]
    outside = next(i for i in first if i not in ids)
    if dot(u, fan.rays[outside]) > 0:
        u = vscale(-1, u)
    diff = [a - b for a, b in zip(plf.covectors[first], plf.covectors[second])]
    j = next(i for i, x in enumerate(u) if x)
    l = Fraction(diff[j], u[j])
    assert all(x == l * y for x, y in zip(diff, u))
    return as_number(l)
