from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sympy_det
from stringy_toric.lattice import (
    det,
    hnf,
    integer_kernel,
    is_integral,
    primitive,
    rank,
    saturated_basis,
    solve_rational,
)

small = st.integers(-6, 6)
vec3 = st.tuples(small, small, small)
nonzero3 = vec3.filter(any)


@pytest.mark.parametrize(
    "v, expected",
    [((2, -4), (1, -2)), ((1, 0, 0), (1, 0, 0)), ((-3, -9), (-1, -3))],
)
def test_primitive_examples(v, expected):
    assert primitive(v) == expected


def test_primitive_zero():
    with pytest.raises(ValueError, match="zero vector has no primitive form"):
        primitive((0, 0))


@given(nonzero3, st.integers(1, 20))
def test_primitive_idempotent_and_scale_invariant(v, k):
    p = primitive(v)
    assert primitive(p) == p
    assert primitive(tuple(k * x for x in v)) == p


def test_saturated_basis_examples():
    assert saturated_basis([(2, 0)]).basis == ((1, 0),)
    assert saturated_basis([(1, 0, 0), (0, 1, 0)]).basis == ((1, 0, 0), (0, 1, 0))
    B = saturated_basis([(1, 1), (1, -1)])
    assert abs(sympy_det(B.basis)) == 1
    assert saturated_basis([], 3).rank == 0


def _max_minor_gcd(rows):
    from itertools import combinations
    from math import gcd

    k, n = len(rows), len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, sympy_det([[r[c] for c in cols] for r in rows]))
    return g


@given(st.lists(vec3, min_size=1, max_size=4))
@settings(max_examples=60)
def test_saturated_basis_properties(points):
    B = saturated_basis(points, 3)
    assert B.rank == rank(points)
    for p in points:
        c = B.coordinates(p)
        assert c is not None and is_integral(c)
    if B.rank:
        assert _max_minor_gcd(B.basis) == 1


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
@settings(max_examples=60)
def test_hnf_is_unimodular_transform(A):
    H, U = hnf(A)
    assert abs(sympy_det(U)) == 1
    prod = [[sum(U[i][k] * A[k][j] for k in range(len(A))) for j in range(3)] for i in range(len(A))]
    assert [list(r) for r in H] == prod
    pivots = [next(j for j, x in enumerate(r) if x) for r in H if any(r)]
    assert pivots == sorted(set(pivots))
    assert all(H[i][p] > 0 for i, p in enumerate(pivots))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_sympy(M):
    assert det(M) == sympy_det(M)


def test_det_rational():
    assert det([[Fraction(1, 2), 1], [0, 3]]) == Fraction(3, 2)


@given(st.lists(vec3, min_size=1, max_size=2))
def test_integer_kernel_is_orthogonal_and_full(rows):
    K = integer_kernel(rows, 3)
    assert len(K) == 3 - rank(rows)
    for k in K:
        assert all(sum(a * b for a, b in zip(r, k)) == 0 for r in rows)


def test_solve_rational_examples():
    assert solve_rational([[1, 0], [0, 1]], [1, 2]) == (1, 2)
    assert solve_rational([[1, 0], [1, 0]], [1, 2]) is None
    assert solve_rational([[1, 0], [0, -3]], [-1, -1]) == (-1, Fraction(1, 3))


@given(
    st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4),
    st.lists(small, min_size=4, max_size=4),
)
def test_solve_rational_solutions_are_exact(A, b):
    b = b[: len(A)]
    x = solve_rational(A, b)
    if x is not None:
        assert all(sum(a * xi for a, xi in zip(row, x)) == bi for row, bi in zip(A, b))
