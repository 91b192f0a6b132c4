"""Normalized volumes, cone volumes, box points and mixed volumes."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, factorial

from .hull import pulling_triangulation
from .lattice import (
    SublatticeBasis,
    as_number,
    as_vector,
    det,
    hnf,
    is_integral,
    rank,
    saturated_basis,
    solve_rational,
    vsub,
)
from .polytope import Polytope, minkowski_sum


def _simplex_volume(coords) -> Fraction | int:
    base = coords[0]
    return abs(det([vsub(c, base) for c in coords[1:]]))


def normalized_volume(P: Polytope, chart: SublatticeBasis | None = None):
    """``dim! * vol`` measured in the saturated lattice of the affine hull.

    With an explicit ``chart`` of larger rank than ``P.dim`` the result is 0.
    """
    if chart is not None:
        if chart.rank > P.dim:
            return 0
        if chart.rank < P.dim or any(c is None for c in map(chart.coordinates, P.chart.basis)):
            raise ValueError("chart does not span the affine hull of the polytope")
    if P.dim == 0:
        return 1
    coords = P.chart_coordinates
    faces = {k: [F.vertex_indices for F in fs] for k, fs in P.faces().items()}
    top = frozenset(range(P.n_vertices))
    total = sum(
        _simplex_volume([coords[i] for i in sorted(S)])
        for S in pulling_triangulation(top, faces)
    )
    return as_number(total)


def euclidean_volume(P: Polytope, chart: SublatticeBasis | None = None):
    k = chart.rank if chart is not None else P.dim
    return as_number(Fraction(normalized_volume(P, chart), factorial(k)))


def cone_volume(generators) -> int:
    """Normalized volume of the hull of 0 and the generators, in the
    saturated lattice of their span; 1 for the zero cone."""
    gens = [as_vector(g) for g in generators]
    if not gens:
        return 1
    s = rank(gens)
    if len(gens) == s:
        chart = saturated_basis(gens)
        return abs(det([chart.coordinates(g) for g in gens]))
    origin = (0,) * len(gens[0])
    return normalized_volume(Polytope([origin] + gens))


@dataclass(frozen=True)
class BoxPoint:
    """Lattice point ``sum lambda_i u_i`` with every ``lambda_i`` in ``(0, 1]``."""

    point: tuple
    coefficients: tuple
    cone: tuple

    @property
    def height(self):
        """``sum lambda_i``; the anticanonical function takes ``-height`` here."""
        return as_number(sum(self.coefficients, Fraction(0)))


def box_points(generators, dim: int | None = None) -> list:
    """Half-open box points of a simplicial cone, one per coset of the
    sublattice spanned by the generators.

    The zero cone has the single box point 0; pass ``dim`` to give it the
    right length.
    """
    gens = tuple(as_vector(g) for g in generators)
    if not gens:
        return [BoxPoint((0,) * (dim or 0), (), ())]
    if rank(gens) != len(gens):
        raise ValueError("box points need a simplicial cone")
    chart = saturated_basis(gens)
    C = [chart.coordinates(g) for g in gens]
    H, _ = hnf(C)
    diag = [H[i][i] for i in range(len(gens))]
    cols = [list(col) for col in zip(*C)]
    out = []
    for x in product(*(range(h) for h in diag)):
        lam = solve_rational(cols, list(x))
        lam = tuple(as_number(l - ceil(l) + 1) for l in lam)
        pt = tuple(
            as_number(sum(l * g[i] for l, g in zip(lam, gens))) for i in range(len(gens[0]))
        )
        assert is_integral(pt)
        out.append(BoxPoint(pt, lam, gens))
    return sorted(out, key=lambda b: (b.height, b.point))


def mixed_volume(polys, chart: SublatticeBasis | None = None):
    """Normalized mixed volume ``sum_S (-1)^(k-|S|) vol_k(sum_{i in S} P_i)``.

    ``vol_k`` is the Euclidean volume in ``chart`` (default: the affine chart
    of the full Minkowski sum).  The diagonal value equals the normalized
    volume.
    """
    polys = list(polys)
    k = len(polys)
    if k == 0:
        return 1
    if chart is None:
        total = polys[0]
        for Q in polys[1:]:
            total = minkowski_sum(total, Q)
        if total.dim != k:
            if total.dim > k:
                raise ValueError("mixed volume needs k polytopes in a k-dimensional chart")
            return 0
        chart = total.chart
    if chart.rank != k:
        raise ValueError("mixed volume needs k polytopes in a k-dimensional chart")
    result = Fraction(0)
    for size in range(1, k + 1):
        for S in combinations(polys, size):
            Q = S[0]
            for R in S[1:]:
                Q = minkowski_sum(Q, R)
            result += (-1) ** (k - size) * Fraction(euclidean_volume(Q, chart))
    return as_number(result)
