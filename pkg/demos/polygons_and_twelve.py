"""
Reflexive polygons and the number twelve
========================================

Enumerate the reflexive polygons, then look at how their volumes pair up
with the volumes of their duals.
"""

# %%
from stringy_toric import normalized_volume
from stringy_toric.fixtures import reflexive_polygons

polys = reflexive_polygons()
print(len(polys), "polygons up to unimodular equivalence")

# %%
# Volume of each polygon next to the volume of its dual.
for P in polys:
    v, w = normalized_volume(P), normalized_volume(P.dual)
    print(f"{P.n_vertices} vertices  v={v}  v*={w}  sum={v + w}")

# %%
# A non-reflexive surface: the dual has a rational vertex, and the
# sum overshoots.
from stringy_toric import verify_ldp12
from stringy_toric.fixtures import F3

rep = verify_ldp12(F3)
print(F3.dual.vertices)
print(rep.lhs, rep.rhs, rep.details)
