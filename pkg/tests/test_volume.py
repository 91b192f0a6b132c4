from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_box_points, brute_mixed_volume, float_normalized_volume
from stringy_toric.fan import canonical_kappa, simplicial_subdivision
from stringy_toric.fixtures import C3, F1, F3, F4, F5, F6, fixture_fans, simplex
from stringy_toric.lattice import det
from stringy_toric.polytope import Polytope, dilate, minkowski_sum, polar_dual
from stringy_toric.volume import box_points, cone_volume, euclidean_volume, mixed_volume, normalized_volume

FANS = fixture_fans()


def test_normalized_volume_examples():
    assert normalized_volume(F1) == 3
    assert normalized_volume(polar_dual(F1)) == 9
    assert normalized_volume(polar_dual(F3)) == Fraction(25, 3)
    edge = Polytope([(-1, -1, -1, -1), (4, -1, -1, -1)], lattice="M")
    assert normalized_volume(edge) == 5
    assert normalized_volume(Polytope([(0, 0, 0)])) == 1


def test_lower_dimensional_volume_uses_saturated_chart():
    tri = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert normalized_volume(tri) == 1
    assert normalized_volume(Polytope([(0, 0), (2, 2)])) == 2
    assert euclidean_volume(simplex(3, 2)) == Fraction(4, 3)


@pytest.mark.parametrize("P", [F1, F4, F5, C3, F6, polar_dual(F4), simplex(3, 3), polar_dual(F3)])
def test_volume_matches_float_hull(P):
    den = 3 if not P.is_lattice else 1
    assert normalized_volume(P) == float_normalized_volume(P.vertices, den)


@pytest.mark.parametrize(
    "gens, v",
    [([(1, 0), (0, 1)], 1), ([(1, 0), (-1, -2)], 2), ([], 1), ([(1, 1, 0), (1, -1, 0)], 2)],
)
def test_cone_volume_examples(gens, v):
    assert cone_volume(gens) == v


def test_box_points_examples():
    (b,) = box_points([(1, 0), (0, 1)])
    assert b.point == (1, 1) and b.coefficients == (1, 1)
    pts = box_points([(1, 0), (-1, -2)])
    assert [(p.point, p.coefficients) for p in pts] == [
        ((0, -1), (Fraction(1, 2), Fraction(1, 2))),
        ((0, -2), (1, 1)),
    ]
    (r,) = box_points([(1, 0)])
    assert r.point == (1, 0) and r.coefficients == (1,)
    (z,) = box_points([], 3)
    assert z.point == (0, 0, 0) and z.height == 0
    with pytest.raises(ValueError, match="simplicial"):
        box_points([(1, 0), (0, 1), (1, 1)])


@pytest.mark.parametrize("name", sorted(FANS))
def test_box_count_is_cone_volume(name):
    sub = simplicial_subdivision(FANS[name])
    for c in (c for k, cs in sub.cones().items() if k for c in cs):
        gens = sub.generators(c)
        assert len(box_points(gens)) == cone_volume(gens)


@pytest.mark.parametrize("name", ["F2", "F3", "F5", "octahedron"])
def test_box_points_match_brute_force(name):
    sub = simplicial_subdivision(FANS[name])
    for c in sub.max_cones:
        gens = sub.generators(c)
        assert sorted(b.point for b in box_points(gens)) == brute_box_points(gens)


@pytest.mark.parametrize("name", ["F1", "F2", "F3", "F7"])
def test_two_dimensional_box_involution(name):
    fan = FANS[name]
    kappa = canonical_kappa(fan)
    for s in fan.max_cones:
        u1, u2 = fan.generators(s)
        inner = [b.point for b in box_points([u1, u2]) if all(l < 1 for l in b.coefficients)]
        for n in inner:
            m = tuple(a + b - c for a, b, c in zip(u1, u2, n))
            assert m in inner and kappa(n) + kappa(m) == -2


vec = st.integers(-3, 3)


@given(st.lists(st.tuples(vec, vec), min_size=2, max_size=2).filter(lambda g: det(g) != 0))
def test_box_count_is_determinant(gens):
    from math import gcd

    prim = [tuple(x // gcd(*g) for x in g) for g in gens]
    if det(prim) == 0:
        return
    assert len(box_points(prim)) == abs(det(prim)) == cone_volume(prim)


def test_mixed_volume_examples():
    T = simplex(2)
    assert mixed_volume([T, T]) == 1
    assert mixed_volume([T, dilate(T, 2)]) == 2
    assert mixed_volume([Polytope([(0, 0), (1, 0)]), Polytope([(0, 0), (0, 1)])]) == 1


def _poly(dim):
    pt = st.tuples(*[st.integers(-2, 2)] * dim)
    return st.lists(pt, min_size=1, max_size=4).map(Polytope)


def _instance(dim):
    return st.lists(_poly(dim), min_size=dim, max_size=dim)


@settings(max_examples=20, deadline=None)
@given(st.one_of(_instance(2), _instance(3)))
def test_mixed_volume_against_float_inclusion_exclusion(polys):
    try:
        mv = mixed_volume(polys)
    except ValueError:
        return
    assert mv == brute_mixed_volume([P.vertices for P in polys])


@settings(max_examples=20, deadline=None)
@given(_poly(2), _poly(2), _poly(2))
def test_mixed_volume_symmetric_and_multilinear(P, Q, R):
    full = minkowski_sum(minkowski_sum(P, Q), R)
    if full.dim != 2:
        return
    assert mixed_volume([P, Q]) == mixed_volume([Q, P])
    assert mixed_volume([minkowski_sum(P, R), Q]) == mixed_volume([P, Q]) + mixed_volume([R, Q])
    assert mixed_volume([dilate(P, 3), Q]) == 3 * mixed_volume([P, Q])


@settings(max_examples=20, deadline=None)
@given(st.one_of(_poly(2), _poly(3)))
def test_mixed_volume_diagonal(P):
    if P.dim != P.ambient_dim:
        return
    assert mixed_volume([P] * P.dim) == normalized_volume(P)
