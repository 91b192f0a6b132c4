"""Verifiers for the combinatorial 12 and 24 identities.

Each verifier computes its two sides through separate code paths (lattice
points or h*-vectors on one side, face volumes on the other) and returns an
:class:`IdentityReport` with per-face or per-point witness rows whose values
sum to the reported sides.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .ehrhart import hstar
from .fan import face_fan, canonical_kappa
from .lattice import as_number
from .polytope import (
    Polytope,
    dual_face,
    gorenstein_data,
    gorenstein_dual,
    is_reflexive,
    origin_is_interior,
)
from .stringy import lw_verify, stringy_e
from .volume import normalized_volume


@dataclass
class IdentityReport:
    name: str
    lhs: object
    rhs: object
    witnesses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """``lhs == rhs``, plus any secondary equalities in ``checks``."""
        return self.lhs == self.rhs and all(self.checks.values())

    def witness_total(self, side: str):
        return as_number(sum((Fraction(v) for _, v in self.witnesses.get(side, ())), Fraction(0)))


def _vol(P: Polytope):
    return normalized_volume(P)


def _require_reflexive(P: Polytope, dim: int | None = None):
    if dim is not None and P.dim != dim:
        raise ValueError(f"needs a {dim}-dimensional polytope, got dimension {P.dim}")
    if not P.is_full_dimensional or not origin_is_interior(P) or not is_reflexive(P):
        raise ValueError("not reflexive")


def reflexive_face_pairs(P: Polytope, k: int) -> list:
    """``(vertices of theta, v(theta), v(theta*))`` over ``k``-faces of a
    reflexive polytope."""
    return [
        (theta.vertices, _vol(theta.as_polytope()), _vol(dual_face(P, theta).as_polytope()))
        for theta in P.faces(k)
    ]


def _products(pairs):
    return [(label, v * w) for label, v, w in pairs]


def _total(rows):
    return as_number(sum((Fraction(v) for _, v in rows), Fraction(0)))


def verify_ldp12(P: Polytope) -> IdentityReport:
    """``v(P) + v(P*) = 12 * sum (kappa(n) + 1)^2`` over lattice points of an
    LDP polygon; ``details`` also records the bound ``>= 12``."""
    if P.dim != 2 or not P.is_full_dimensional or not P.is_lattice:
        raise ValueError("not an LDP polygon: needs a 2-dimensional lattice polygon")
    if not origin_is_interior(P) or any(gcd(*v) != 1 for v in P.vertices):
        raise ValueError("not an LDP polygon: origin must be interior and vertices primitive")
    kappa = canonical_kappa(face_fan(P))
    lhs_rows = [("v(P)", _vol(P)), ("v(P*)", _vol(P.dual))]
    rhs_rows = [(n, 12 * (Fraction(kappa(n)) + 1) ** 2) for n in P.lattice_points()]
    rhs_rows = [(n, as_number(x)) for n, x in rhs_rows if x]
    lhs, refl = _total(lhs_rows), is_reflexive(P)
    return IdentityReport(
        "ldp12",
        lhs,
        _total(rhs_rows),
        {"lhs": lhs_rows, "rhs": rhs_rows},
        {"reflexive": refl, "bound_holds": lhs >= 12 and (lhs == 12) == refl},
    )


def verify_refl2(P: Polytope) -> IdentityReport:
    _require_reflexive(P, 2)
    rows = [("v(P)", _vol(P)), ("v(P*)", _vol(P.dual))]
    return IdentityReport("refl2", _total(rows), 12, {"lhs": rows})


def verify_refl3(P: Polytope) -> IdentityReport:
    """Edge sum ``sum v(theta) v(theta*) = 24``."""
    _require_reflexive(P, 3)
    pairs = reflexive_face_pairs(P, 1)
    rows = _products(pairs)
    return IdentityReport("refl3", _total(rows), 24, {"lhs": rows}, {"pairs": pairs})


def _boundary_count(P: Polytope) -> int:
    return len(P.lattice_points("boundary"))


def verify_refl4(P: Polytope) -> IdentityReport:
    """``12 |boundary points| = 2 v(P) + sum over 2-faces of v(theta) v(theta*)``."""
    _require_reflexive(P, 4)
    b = _boundary_count(P)
    pairs = reflexive_face_pairs(P, 2)
    rhs_rows = [("2 v(P)", 2 * _vol(P))] + _products(pairs)
    return IdentityReport(
        "refl4", 12 * b, _total(rhs_rows), {"lhs": [("12 * boundary", 12 * b)], "rhs": rhs_rows},
        {"pairs": pairs},
    )


def verify_refl4_sym(P: Polytope) -> IdentityReport:
    """Sum of the 4-dimensional identity for ``P`` and for ``P*``, written
    with faces of ``P`` of dimension 1 and 2 only."""
    _require_reflexive(P, 4)
    Q = P.dual
    lhs_rows = [("12 * boundary(P)", 12 * _boundary_count(P)), ("12 * boundary(P*)", 12 * _boundary_count(Q))]
    rhs_rows = [("2 v(P)", 2 * _vol(P)), ("2 v(P*)", 2 * _vol(Q))]
    rhs_rows += _products(reflexive_face_pairs(P, 1)) + _products(reflexive_face_pairs(P, 2))
    return IdentityReport(
        "refl4sym", _total(lhs_rows), _total(rhs_rows), {"lhs": lhs_rows, "rhs": rhs_rows}
    )


def _gorenstein_pairs(P: Polytope, index: int, k: int):
    gd = gorenstein_data(P)
    if gd is None or gd.index != index:
        found = "not Gorenstein" if gd is None else f"index {gd.index}"
        raise ValueError(f"wrong index: needs Gorenstein index {index}, polytope has {found}")
    pairing = gorenstein_dual(P, gd).pairing
    return [
        (theta.vertices, _vol(theta.as_polytope()), _vol(pairing[theta].as_polytope()))
        for theta in P.faces(k)
    ]


def verify_gor24(P: Polytope) -> IdentityReport:
    """``24 = sum_{dim theta = r} v(theta) v(theta*) + r(1-r)/2 v(P)`` for a
    Gorenstein polytope of index ``r = d - 2``."""
    r = P.dim - 2
    pairs = _gorenstein_pairs(P, r, r)
    rows = _products(pairs) + [("r(1-r)/2 v(P)", as_number(Fraction(r * (1 - r), 2) * _vol(P)))]
    return IdentityReport("gor24", _total(rows), 24, {"lhs": rows}, {"index": r})


def verify_gor12(P: Polytope) -> IdentityReport:
    """``12 = sum_{dim theta = r-1} v(theta) v(theta*) + (r(1-r)+2)/2 v(P)``
    for a Gorenstein polytope of index ``r = d - 1``."""
    r = P.dim - 1
    pairs = _gorenstein_pairs(P, r, r - 1)
    rows = _products(pairs) + [
        ("(r(1-r)+2)/2 v(P)", as_number(Fraction(r * (1 - r) + 2, 2) * _vol(P)))
    ]
    return IdentityReport("gor12", _total(rows), 12, {"lhs": rows}, {"index": r})


def verify_hodgepsi(P: Polytope) -> IdentityReport:
    """Coefficients of the E-function of the face fan against the h*-vector."""
    _require_reflexive(P)
    E = stringy_e(face_fan(P))
    if any(not isinstance(a, int) for a in E.exponents):
        lhs = tuple(E.terms)
    else:
        lhs = tuple(E.coefficient(j) for j in range(P.dim + 1))
    rhs = tuple(hstar(P).coefficients)
    return IdentityReport("hodgepsi", lhs, rhs)


def verify_lw_reflexive(P: Polytope) -> IdentityReport:
    """``sum psi_j (j - d/2)^2 = d/12 v(P) + 1/6 sum_{dim theta = d-2} v(theta) v(theta*)``."""
    _require_reflexive(P)
    d = P.dim
    psi = hstar(P).coefficients
    lhs_rows = [(j, as_number(c * (j - Fraction(d, 2)) ** 2)) for j, c in enumerate(psi)]
    pairs = reflexive_face_pairs(P, d - 2)
    rhs_rows = [("d/12 v(P)", as_number(Fraction(d, 12) * _vol(P)))] + [
        (label, as_number(Fraction(x, 6))) for label, x in _products(pairs)
    ]
    return IdentityReport(
        "lw", _total(lhs_rows), _total(rhs_rows), {"lhs": lhs_rows, "rhs": rhs_rows}
    )


def verify_lw_fan(fan) -> IdentityReport:
    """Libgober-Wood on a fan.  The uncentered form is reported as the two
    sides; the centered form and the box form enter through ``checks``."""
    rep = lw_verify(fan)
    sixth = as_number(Fraction(rep.c1_c) / 6)
    return IdentityReport(
        "lwfan",
        rep.lhs,
        rep.rhs,
        {"rhs": [("(3d^2-5d)/12 v", as_number(rep.rhs - Fraction(sixth))), ("c1.c/6", sixth)]},
        {
            "centered_lhs": rep.centered_lhs,
            "centered_rhs": rep.centered_rhs,
            "boxform_lhs": rep.boxform_lhs,
            "euler_number": rep.euler_number,
            "c1_c": rep.c1_c,
        },
        {
            "centered": rep.centered_lhs == rep.centered_rhs,
            "boxform": rep.boxform_lhs == rep.lhs,
        },
    )
