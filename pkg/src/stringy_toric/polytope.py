"""Lattice and rational polytopes.

A :class:`Polytope` is stored by its irredundant vertex list in
lexicographic order, so two polytopes with the same point set compare equal
and faces (sets of vertex indices) are reproducible.  Polytopes that are not
full-dimensional are handled in the saturated lattice chart of their affine
hull.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor
from typing import NamedTuple, Optional

import numpy as np

from .hull import affine_dims, close_under_intersection, facet_inequalities
from .lattice import (
    as_vector,
    dot,
    is_integral,
    rank,
    saturated_basis,
    vadd,
    vscale,
    vsub,
)


class Facet(NamedTuple):
    """Inequality ``<normal, x> >= offset`` with a primitive integer normal."""

    normal: tuple
    offset: Fraction | int


@dataclass(frozen=True)
class Face:
    """A face, given by the indices of the parent's vertices lying on it."""

    vertex_indices: frozenset
    dim: int
    polytope: "Polytope" = field(compare=False, repr=False)

    @property
    def vertices(self) -> tuple:
        return tuple(self.polytope.vertices[i] for i in sorted(self.vertex_indices))

    def as_polytope(self) -> "Polytope":
        return Polytope(self.vertices, lattice=self.polytope.lattice)


class GorensteinData(NamedTuple):
    index: int
    shift: tuple


class GorensteinDual(NamedTuple):
    polytope: "Polytope"
    pairing: dict


class Polytope:
    """Convex hull of finitely many rational points.

    Parameters
    ----------
    points : iterable of sequences
        Points whose convex hull is the polytope.  Redundant points are
        dropped.
    lattice : {"N", "M"}
        Which of the two dual lattices the polytope lives in.  Only used as
        a tag; :func:`polar_dual` flips it.
    """

    def __init__(self, points, lattice: str = "N"):
        pts = sorted({as_vector(p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        self.lattice = lattice
        self.ambient_dim = len(pts[0])
        chart = saturated_basis([vsub(p, pts[0]) for p in pts], self.ambient_dim)
        self.dim = chart.rank
        if self.dim == 0:
            verts = pts[:1]
        else:
            coords = [chart.coordinates(vsub(p, pts[0])) for p in pts]
            facets = facet_inequalities(coords)
            verts = []
            for p, c in zip(pts, coords):
                tight = [a for a, b in facets if dot(a, c) == b]
                if rank(tight) == self.dim:
                    verts.append(p)
        self.vertices = tuple(verts)
        self.chart = chart

    # basic structure -------------------------------------------------

    def __repr__(self):
        return f"Polytope({[list(v) for v in self.vertices]}, lattice={self.lattice!r})"

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def is_lattice(self) -> bool:
        return all(is_integral(v) for v in self.vertices)

    @cached_property
    def chart_coordinates(self) -> tuple:
        """Vertex coordinates in the affine-hull chart based at vertex 0."""
        v0 = self.vertices[0]
        return tuple(self.chart.coordinates(vsub(v, v0)) for v in self.vertices)

    @cached_property
    def chart_facets(self) -> tuple:
        if self.dim == 0:
            return ()
        return tuple(Facet(*f) for f in facet_inequalities(self.chart_coordinates))

    @cached_property
    def facets(self) -> tuple:
        """Irredundant facet inequalities in ambient coordinates."""
        if not self.is_full_dimensional:
            raise ValueError(
                "facet description in ambient coordinates needs a full-dimensional "
                "polytope; use chart_facets for lower-dimensional ones"
            )
        return tuple(Facet(*f) for f in facet_inequalities(self.vertices))

    @cached_property
    def incidences(self) -> tuple:
        """For each facet, the frozenset of vertex indices on it."""
        if self.is_full_dimensional:
            facets, coords = self.facets, self.vertices
        else:
            facets, coords = self.chart_facets, self.chart_coordinates
        return tuple(
            frozenset(i for i, c in enumerate(coords) if dot(a, c) == b)
            for a, b in facets
        )

    @cached_property
    def _faces(self) -> dict:
        top = frozenset(range(self.n_vertices))
        sets = close_under_intersection(top, self.incidences)
        dims = affine_dims(sets, self.vertices)
        by_dim = {k: [] for k in range(self.dim + 1)}
        for F in sorted(sets, key=lambda s: (dims[s], sorted(s))):
            by_dim[dims[F]].append(Face(F, dims[F], self))
        return by_dim

    def faces(self, k: Optional[int] = None):
        """Faces of dimension ``k``, or the whole face lattice by dimension."""
        if k is None:
            return {j: list(fs) for j, fs in self._faces.items()}
        return list(self._faces.get(k, ()))

    @property
    def f_vector(self) -> tuple:
        return tuple(len(self._faces[k]) for k in range(self.dim + 1))

    def face(self, vertex_indices) -> Face:
        key = frozenset(vertex_indices)
        for fs in self._faces.values():
            for F in fs:
                if F.vertex_indices == key:
                    return F
        raise ValueError("vertex set is not a face")

    # points ----------------------------------------------------------

    def contains(self, x, strict: bool = False) -> bool:
        if self.is_full_dimensional:
            if strict:
                return all(dot(a, x) > b for a, b in self.facets)
            return all(dot(a, x) >= b for a, b in self.facets)
        c = self.chart.coordinates(vsub(x, self.vertices[0]))
        if c is None:
            return False
        if strict:
            return all(dot(a, c) > b for a, b in self.chart_facets)
        return all(dot(a, c) >= b for a, b in self.chart_facets)

    def lattice_points(self, which: str = "all") -> list:
        """Lattice points, optionally only the (relative) ``interior`` or
        ``boundary`` ones, in lexicographic order."""
        if which not in ("all", "interior", "boundary"):
            raise ValueError(f"unknown selection {which!r}")
        if self.dim == 0:
            v = self.vertices[0]
            if not is_integral(v):
                return []
            return [v] if which in ("all", "interior") else []
        if self.is_full_dimensional:
            pts, on_bd = _scan(self.vertices, self.facets)
            return _select(pts, on_bd, which)
        if not self.is_lattice:
            raise NotImplementedError(
                "lattice points of lower-dimensional rational polytopes"
            )
        pts, on_bd = _scan(self.chart_coordinates, self.chart_facets)
        v0 = self.vertices[0]
        chosen = _select(pts, on_bd, which)
        return sorted(vadd(v0, self.chart.vector(c)) for c in chosen)

    def n_lattice_points(self, which: str = "all") -> int:
        return len(self.lattice_points(which))

    @cached_property
    def dual(self) -> "Polytope":
        return polar_dual(self)


def _scan(vertices, facets):
    """Bounding-box scan; returns integer points and their boundary flags."""
    d = len(vertices[0])
    lo = [floor(min(v[i] for v in vertices)) for i in range(d)]
    hi = [ceil(max(v[i] for v in vertices)) for i in range(d)]
    A = np.array([a for a, _ in facets], dtype=np.int64)
    lower = np.array([ceil(b) for _, b in facets], dtype=np.int64)
    exact = np.array([Fraction(b).denominator == 1 for _, b in facets])
    rest = [np.arange(lo[i], hi[i] + 1, dtype=np.int64) for i in range(1, d)]
    tail = (
        np.stack(np.meshgrid(*rest, indexing="ij"), -1).reshape(-1, d - 1)
        if d > 1
        else np.zeros((1, 0), dtype=np.int64)
    )
    pts, flags = [], []
    for x0 in range(lo[0], hi[0] + 1):
        X = np.hstack([np.full((len(tail), 1), x0, dtype=np.int64), tail])
        vals = X @ A.T
        inside = np.all(vals >= lower, axis=1)
        if not inside.any():
            continue
        Xin, Vin = X[inside], vals[inside]
        bd = np.any((Vin == lower) & exact, axis=1)
        pts.extend(tuple(int(x) for x in row) for row in Xin)
        flags.extend(bool(b) for b in bd)
    return pts, flags


def _select(pts, flags, which):
    if which == "all":
        return pts
    want = which == "boundary"
    return [p for p, f in zip(pts, flags) if f == want]


# module-level operations ---------------------------------------------


def from_vertices(points, lattice: str = "N") -> Polytope:
    return Polytope(points, lattice=lattice)


def facet_description(P: Polytope) -> tuple:
    return P.facets


def face_lattice(P: Polytope) -> dict:
    return P.faces()


def lattice_points(P: Polytope, which: str = "all") -> list:
    return P.lattice_points(which)


def _other(lattice):
    return {"N": "M", "M": "N"}.get(lattice, lattice)


def origin_is_interior(P: Polytope) -> bool:
    return P.is_full_dimensional and all(b < 0 for _, b in P.facets)


def polar_dual(P: Polytope) -> Polytope:
    """``{y : <y, x> >= -1 for all x in P}``."""
    if not origin_is_interior(P):
        raise ValueError("dual undefined: origin is not an interior point")
    return Polytope(
        [vscale(Fraction(1) / -b, a) for a, b in P.facets], lattice=_other(P.lattice)
    )


def is_reflexive(P: Polytope) -> bool:
    if not origin_is_interior(P):
        raise ValueError("dual undefined: origin is not an interior point")
    return P.is_lattice and all(b == -1 for _, b in P.facets)


def dual_face(P: Polytope, theta: Face) -> Face:
    """Face of ``P*`` on which every point of ``theta`` pairs to ``-1``."""
    if theta.vertex_indices == frozenset(range(P.n_vertices)):
        raise ValueError("no dual face for the full polytope")
    Q = P.dual
    index = {v: i for i, v in enumerate(Q.vertices)}
    dual_vertices = frozenset(
        index[as_vector(vscale(Fraction(1) / -b, a))]
        for (a, b), inc in zip(P.facets, P.incidences)
        if theta.vertex_indices <= inc
    )
    return Q.face(dual_vertices)


def dilate(P: Polytope, k) -> Polytope:
    if k < 0:
        raise ValueError("dilation factor must be nonnegative")
    return Polytope([vscale(k, v) for v in P.vertices], lattice=P.lattice)


def translate(P: Polytope, t) -> Polytope:
    return Polytope([vadd(v, t) for v in P.vertices], lattice=P.lattice)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("Minkowski sum needs a common ambient space")
    return Polytope(
        [vadd(p, q) for p in P.vertices for q in Q.vertices], lattice=P.lattice
    )


def gorenstein_data(P: Polytope) -> Optional[GorensteinData]:
    """Index ``r`` and shift ``m`` with ``rP - m`` reflexive, if any.

    The first dilate with an interior lattice point decides: it must have a
    single interior point ``m`` and ``rP - m`` must be reflexive.
    """
    if not (P.is_lattice and P.is_full_dimensional):
        raise ValueError("Gorenstein test needs a full-dimensional lattice polytope")
    for r in range(1, P.dim + 2):
        inner = dilate(P, r).lattice_points("interior")
        if not inner:
            continue
        if len(inner) == 1:
            m = inner[0]
            if is_reflexive(translate(dilate(P, r), vscale(-1, m))):
                return GorensteinData(r, m)
        return None
    return None


def reflexive_model(P: Polytope, gd: GorensteinData) -> Polytope:
    """``rP - m``, checked to be reflexive.  Same vertex order as ``P``."""
    r, m = gd
    Q = Polytope([vsub(vscale(r, v), m) for v in P.vertices], lattice=P.lattice)
    if Q.n_vertices != P.n_vertices or not origin_is_interior(Q) or not is_reflexive(Q):
        raise ValueError("invalid Gorenstein data: rP - m is not reflexive")
    return Q


def gorenstein_dual(P: Polytope, gd: GorensteinData) -> GorensteinDual:
    """Dual Gorenstein polytope, realised as ``(rP - m)*``, and the
    order-reversing pairing of proper faces of ``P`` with its faces."""
    Q = reflexive_model(P, gd)
    pairing = {}
    for k in range(P.dim):
        for theta in P.faces(k):
            pairing[theta] = dual_face(Q, Q.face(theta.vertex_indices))
    return GorensteinDual(Q.dual, pairing)
