"""Exact stringy invariants of toric varieties from lattice polytopes and fans.

The main entry points are re-exported here; see the submodules for details.
"""

from .ehrhart import HStarVector, codegree, dilate_counts, hstar
from .fan import (
    Cone,
    Fan,
    PLFunction,
    TorusDivisor,
    canonical_kappa,
    divisor_face,
    divisor_polytope,
    face_fan,
    gorenstein_index,
    is_ample,
    is_semiample,
    normal_fan,
    polytope_divisor,
    simplicial_subdivision,
    wall_coefficient,
)
from .identities import (
    IdentityReport,
    verify_gor12,
    verify_gor24,
    verify_hodgepsi,
    verify_ldp12,
    verify_lw_fan,
    verify_lw_reflexive,
    verify_refl2,
    verify_refl3,
    verify_refl4,
    verify_refl4_sym,
)
from .lattice import SublatticeBasis, primitive, saturated_basis, solve_rational
from .polytope import (
    Face,
    GorensteinData,
    Polytope,
    dilate,
    dual_face,
    from_vertices,
    gorenstein_data,
    gorenstein_dual,
    is_reflexive,
    minkowski_sum,
    polar_dual,
    translate,
)
from .stringy import (
    ChernCycle,
    LWReport,
    StringyE,
    euler_ci,
    euler_cy_ci,
    euler_hypersurface,
    inter_c1,
    inter_mixed,
    inter_power,
    lw_lhs,
    lw_lhs_boxform,
    lw_verify,
    stringy_chern,
    stringy_e,
    stringy_e_2d,
    stringy_euler,
)
from .volume import BoxPoint, box_points, cone_volume, mixed_volume, normalized_volume

__version__ = "0.1.0"

__all__ = [
    "BoxPoint",
    "ChernCycle",
    "Cone",
    "Face",
    "Fan",
    "GorensteinData",
    "HStarVector",
    "IdentityReport",
    "LWReport",
    "PLFunction",
    "Polytope",
    "StringyE",
    "SublatticeBasis",
    "TorusDivisor",
    "box_points",
    "canonical_kappa",
    "codegree",
    "cone_volume",
    "dilate",
    "dilate_counts",
    "divisor_face",
    "divisor_polytope",
    "dual_face",
    "euler_ci",
    "euler_cy_ci",
    "euler_hypersurface",
    "face_fan",
    "from_vertices",
    "gorenstein_data",
    "gorenstein_dual",
    "gorenstein_index",
    "hstar",
    "inter_c1",
    "inter_mixed",
    "inter_power",
    "is_ample",
    "is_reflexive",
    "is_semiample",
    "lw_lhs",
    "lw_lhs_boxform",
    "lw_verify",
    "minkowski_sum",
    "mixed_volume",
    "normal_fan",
    "normalized_volume",
    "polar_dual",
    "polytope_divisor",
    "primitive",
    "saturated_basis",
    "simplicial_subdivision",
    "solve_rational",
    "stringy_chern",
    "stringy_e",
    "stringy_e_2d",
    "stringy_euler",
    "translate",
    "verify_gor12",
    "verify_gor24",
    "verify_hodgepsi",
    "verify_ldp12",
    "verify_lw_fan",
    "verify_lw_reflexive",
    "verify_refl2",
    "verify_refl3",
    "verify_refl4",
    "verify_refl4_sym",
    "wall_coefficient",
]
