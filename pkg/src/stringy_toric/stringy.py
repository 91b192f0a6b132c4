"""Stringy E-functions, stringy Chern cycles, intersection numbers and
stringy Euler numbers of toric varieties given by complete fans."""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .fan import (
    Fan,
    TorusDivisor,
    canonical_kappa,
    divisor_face,
    divisor_polytope,
    is_cartier,
    is_semiample,
    simplicial_subdivision,
    support_covectors,
    wall_coefficient,
)
from .lattice import as_number, orthogonal_lattice, solve_rational
from .polytope import Polytope, gorenstein_data, gorenstein_dual
from .volume import box_points, cone_volume, mixed_volume, normalized_volume


@dataclass(frozen=True)
class StringyE:
    """Sparse polynomial ``sum psi_alpha t^alpha`` in ``t = uv`` with
    nonnegative rational exponents."""

    terms: tuple

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(sorted((as_number(a), c) for a, c in d.items() if c)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, alpha) -> int:
        return self.as_dict().get(as_number(alpha), 0)

    @property
    def exponents(self) -> tuple:
        return tuple(a for a, _ in self.terms)

    def moment(self, f):
        """``sum f(alpha) psi_alpha``."""
        return as_number(sum((Fraction(f(Fraction(a))) * c for a, c in self.terms), Fraction(0)))

    @property
    def euler_number(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self):
        parts = []
        for a, c in self.terms:
            if a == 0:
                parts.append(str(c))
                continue
            mono = "t" if a == 1 else f"t^{a}" if isinstance(a, int) else f"t^({a})"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ChernCycle:
    """``c_k`` as a formal sum of ``k``-dimensional cones with volume weights."""

    degree: int
    coefficients: dict = field(hash=False)

    @property
    def total(self) -> int:
        return sum(self.coefficients.values())


def stringy_e(fan: Fan, order=None) -> StringyE:
    """Box-point expansion over a simplicial subdivision with the same rays."""
    canonical_kappa(fan)
    sub = simplicial_subdivision(fan, order)
    d = fan.dim
    acc = defaultdict(int)
    for s, cones in sub.cones().items():
        expansion = [(j, comb(d - s, j) * (-1) ** (d - s - j)) for j in range(d - s + 1)]
        for c in cones:
            for b in box_points(sub.generators(c), d):
                base = s - b.height
                for j, coeff in expansion:
                    acc[as_number(base + j)] += coeff
    return StringyE.from_dict(acc)


def _kappa_points(fan: Fan):
    """Lattice points with ``kappa >= -1`` paired with their ``kappa`` value."""
    kappa = canonical_kappa(fan)
    origin = (0,) * fan.dim
    seen = {}
    for s in fan.max_cones:
        theta = Polytope([origin] + fan.generators(s))
        for n in theta.lattice_points():
            if n not in seen:
                seen[n] = kappa(n)
    return seen


def stringy_e_2d(fan: Fan) -> StringyE:
    """Surface formula via the lattice points with ``-1 <= kappa < 0``."""
    if fan.dim != 2:
        raise ValueError("surface formula needs a 2-dimensional fan")
    acc = defaultdict(int, {0: 1, 1: -2, 2: 1})
    for n, k in _kappa_points(fan).items():
        if k == -1:
            acc[1] += 1
        elif -1 < k < 0:
            acc[as_number(2 + k)] += 1
            acc[as_number(-k)] += 1
    return StringyE.from_dict(acc)


def stringy_euler(fan: Fan) -> int:
    return sum(cone_volume(fan.generators(s)) for s in fan.max_cones)


def stringy_chern(fan: Fan, k: int) -> ChernCycle:
    if not 0 <= k <= fan.dim:
        raise ValueError("degree out of range")
    return ChernCycle(k, {c: cone_volume(fan.generators(c)) for c in fan.cones(k)})


def wall_contributions(fan: Fan, D: TorusDivisor | None = None) -> list:
    """``(wall, v(wall), l_D(wall))`` for every wall, ``D`` defaulting to ``-K``."""
    D = D or TorusDivisor.anticanonical(fan)
    plf = support_covectors(fan, D)
    return [
        (c, cone_volume(fan.generators(c)), wall_coefficient(fan, D, c, plf))
        for c in fan.cones(fan.dim - 1)
    ]


def inter_c1(fan: Fan):
    """``c_1 . c_{d-1}`` from wall coefficients of the anticanonical divisor."""
    canonical_kappa(fan)
    return as_number(sum((Fraction(v * l) for _, v, l in wall_contributions(fan)), Fraction(0)))


def _require_semiample(fan, D):
    support_covectors(fan, D)
    if not is_semiample(fan, D):
        raise ValueError("divisor is not semiample")


def inter_power_terms(fan: Fan, D: TorusDivisor, k: int) -> list:
    """``(cone, v(cone), v(face))`` over cones of dimension ``d - k``."""
    d = fan.dim
    if not 0 <= k <= d:
        raise ValueError("power out of range")
    _require_semiample(fan, D)
    P = divisor_polytope(fan, D)
    out = []
    for c in fan.cones(d - k):
        gens = fan.generators(c)
        face = divisor_face(fan, D, c, P)
        vol = 0 if face is None else normalized_volume(face, orthogonal_lattice(gens, d))
        out.append((c, cone_volume(gens), vol))
    return out


def inter_power(fan: Fan, D: TorusDivisor, k: int):
    """``[D]^k . c_{d-k}`` as a sum of cone volumes times face volumes."""
    return as_number(sum((Fraction(v * w) for _, v, w in inter_power_terms(fan, D, k)), Fraction(0)))


def inter_mixed(fan: Fan, divisors):
    """``[D_1] ... [D_k] . c_{d-k}`` via mixed volumes of faces."""
    divisors = list(divisors)
    d, k = fan.dim, len(divisors)
    if not 0 <= k <= d:
        raise ValueError("too many divisors")
    polys = []
    for D in divisors:
        _require_semiample(fan, D)
        polys.append(divisor_polytope(fan, D))
    total = Fraction(0)
    for c in fan.cones(d - k):
        gens = fan.generators(c)
        faces = [divisor_face(fan, D, c, P) for D, P in zip(divisors, polys)]
        if any(f is None for f in faces):
            continue
        total += cone_volume(gens) * Fraction(mixed_volume(faces, orthogonal_lattice(gens, d)))
    return as_number(total)


def _require_cartier_semiample(fan, D):
    if not is_cartier(fan, D):
        raise ValueError("divisor is not Cartier")
    if not is_semiample(fan, D):
        raise ValueError("divisor is not semiample")


def is_anticanonical_class(fan: Fan, D: TorusDivisor) -> bool:
    """Whether ``D + K`` is the divisor of a rational character."""
    return solve_rational(fan.rays, [a - 1 for a in D.coefficients]) is not None


def euler_hypersurface(fan: Fan, D: TorusDivisor):
    """Stringy Euler number of a generic member of ``|D|``.

    For ``D`` in the anticanonical class the two top terms must cancel; a
    mismatch raises instead of being silently absorbed.
    """
    _require_cartier_semiample(fan, D)
    d = fan.dim
    T = [inter_power(fan, D, k + 1) for k in range(d)]
    if d >= 2 and is_anticanonical_class(fan, D) and T[d - 2] != T[d - 1]:
        raise ArithmeticError(
            f"anticanonical cancellation failed: {T[d - 2]} != {T[d - 1]}"
        )
    return as_number(sum((-1) ** k * Fraction(t) for k, t in enumerate(T)))


def euler_ci(fan: Fan, D: TorusDivisor, r: int):
    """Stringy Euler number of a generic complete intersection of ``r``
    members of ``|D|``."""
    d = fan.dim
    if not 1 <= r <= d:
        raise ValueError("number of equations out of range")
    _require_cartier_semiample(fan, D)
    return as_number(
        sum(
            (-1) ** k * comb(k + r - 1, r - 1) * Fraction(inter_power(fan, D, r + k))
            for k in range(d - r + 1)
        )
    )


def face_pair_volumes(P: Polytope, pairing: dict, k: int) -> list:
    """``(face, v(face), v(dual face))`` over faces of dimension ``k``."""
    return [
        (theta, normalized_volume(theta.as_polytope()), normalized_volume(pairing[theta].as_polytope()))
        for theta in P.faces(k)
    ]


def euler_cy_ci(P: Polytope, r: int):
    """Stringy Euler number of the Calabi-Yau complete intersection attached
    to a Gorenstein polytope of index ``r``, from face/dual-face volumes."""
    gd = gorenstein_data(P)
    if gd is None or gd.index != r:
        raise ValueError(f"polytope is not Gorenstein of index {r}")
    d = P.dim
    pairing = gorenstein_dual(P, gd).pairing
    total = Fraction(0)
    for k in range(d - r):
        s = sum(v * w for _, v, w in face_pair_volumes(P, pairing, k + r))
        total += (-1) ** k * comb(k + r - 1, r - 1) * s
    total += (-1) ** (d - r) * comb(d - 1, r - 1) * normalized_volume(P)
    return as_number(total)


def lw_lhs(fan: Fan, E: StringyE | None = None):
    """Second derivative of the E-function at 1, ``sum alpha(alpha-1) psi_alpha``."""
    E = E or stringy_e(fan)
    return E.moment(lambda a: a * (a - 1))


def lw_lhs_boxform(fan: Fan, order=None):
    """The same second derivative, read directly from box points of the
    cones of dimension ``d-2``, ``d-1`` and ``d`` of a simplicial subdivision."""
    canonical_kappa(fan)
    sub = simplicial_subdivision(fan, order)
    d = fan.dim
    total = Fraction(0)
    if d >= 2:
        total += 2 * sum(len(box_points(sub.generators(c), d)) for c in sub.cones(d - 2))
    for c in sub.cones(d - 1):
        total += 2 * sum(d - b.height - 1 for b in box_points(sub.generators(c), d))
    for c in sub.cones(d):
        total += sum((d - b.height) * (d - b.height - 1) for b in box_points(sub.generators(c), d))
    return as_number(total)


@dataclass
class LWReport:
    lhs: object
    rhs: object
    centered_lhs: object
    centered_rhs: object
    boxform_lhs: object
    euler_number: int
    c1_c: object
    walls: list

    @property
    def passed(self) -> bool:
        return (
            self.lhs == self.rhs
            and self.centered_lhs == self.centered_rhs
            and self.lhs == self.boxform_lhs
        )


def lw_verify(fan: Fan) -> LWReport:
    """Both forms of the stringy Libgober-Wood identity plus the box form."""
    d = fan.dim
    E = stringy_e(fan)
    v = stringy_euler(fan)
    walls = wall_contributions(fan)
    c1c = sum((Fraction(w * l) for _, w, l in walls), Fraction(0))
    half = Fraction(d, 2)
    return LWReport(
        lhs=lw_lhs(fan, E),
        rhs=as_number(Fraction(3 * d * d - 5 * d, 12) * v + c1c / 6),
        centered_lhs=E.moment(lambda a: (a - half) ** 2),
        centered_rhs=as_number(Fraction(d, 12) * v + c1c / 6),
        boxform_lhs=lw_lhs_boxform(fan),
        euler_number=v,
        c1_c=as_number(c1c),
        walls=walls,
    )
