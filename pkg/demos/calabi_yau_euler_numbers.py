"""
Euler numbers of Calabi-Yau hypersurfaces
=========================================

The same number two ways: from intersection numbers on the fan of the
ambient toric variety, and from volumes of dual face pairs of the polytope.
"""

# %%
from stringy_toric import TorusDivisor, euler_ci, euler_cy_ci, euler_hypersurface, polytope_divisor
from stringy_toric.fixtures import F6, fixture_fans, reflexive_simplex

fans = fixture_fans()

# %%
# Quartic surface and quintic threefold from the anticanonical divisor.
for name in ("F4", "F5"):
    fan = fans[name]
    print(name, euler_hypersurface(fan, TorusDivisor.anticanonical(fan)))

# %%
# Face-pair formula on the dual side. r is the Gorenstein index.
for P, r in ((reflexive_simplex(3), 1), (reflexive_simplex(4), 1), (F6, 2)):
    fan, D = polytope_divisor(P)
    print(P.dim, r, euler_cy_ci(P, r), euler_ci(fan, D, r))

# %%
# A line in the projective plane: genus zero, Euler number two.
f1 = fans["F1"]
line = TorusDivisor.prime(f1, f1.rays.index((-1, -1)))
print(euler_hypersurface(f1, line))
