"""Ehrhart counting and the h*-vector of a lattice polytope."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .polytope import Polytope, dilate


@dataclass(frozen=True)
class HStarVector:
    coefficients: tuple
    dim: int

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coefficients) if c)

    @property
    def is_palindromic(self) -> bool:
        c = self.coefficients[: self.degree + 1]
        return c == c[::-1]

    @property
    def codegree(self) -> int:
        return self.dim + 1 - self.degree

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)


def dilate_counts(P: Polytope, kmax: int) -> tuple:
    if not P.is_lattice:
        raise ValueError("Ehrhart counts need a lattice polytope")
    return tuple(dilate(P, k).n_lattice_points() for k in range(kmax + 1))


def hstar(P: Polytope) -> HStarVector:
    d = P.dim
    L = dilate_counts(P, d)
    psi = tuple(
        sum((-1) ** i * comb(d + 1, i) * L[j - i] for i in range(j + 1)) for j in range(d + 1)
    )
    assert psi[0] == 1 and min(psi) >= 0, psi
    return HStarVector(psi, d)


def codegree(P: Polytope) -> int:
    return hstar(P).codegree


def _binomial(x: int, d: int) -> Fraction:
    """Polynomial binomial ``x (x-1) ... (x-d+1) / d!``, valid for negative ``x``."""
    num = 1
    for i in range(d):
        num *= x - i
    return Fraction(num, factorial(d))


def ehrhart_value(h: HStarVector, k: int):
    """Ehrhart polynomial at any integer ``k`` (reciprocity for ``k < 0``)."""
    d = h.dim
    value = sum(c * _binomial(k - j + d, d) for j, c in enumerate(h.coefficients))
    return int(value) if value.denominator == 1 else value
