"""
Fractional exponents on a singular surface
==========================================

A surface whose anticanonical divisor is only Q-Cartier has an E-function
with rational exponents. Both sides of the Libgober-Wood identity stay exact.
"""

# %%
from stringy_toric.fixtures import F3
from stringy_toric import face_fan, gorenstein_index, lw_verify, stringy_e, stringy_e_2d

fan = face_fan(F3)
print("index", gorenstein_index(fan))

# %%
E = stringy_e(fan)
print(E)
print(E == stringy_e_2d(fan))  # box points vs the surface formula

# %%
rep = lw_verify(fan)
print(rep.lhs, rep.rhs)
print(rep.centered_lhs, rep.centered_rhs)
print(rep.boxform_lhs, rep.passed)
