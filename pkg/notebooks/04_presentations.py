# # Presentations from Schreier generators
#
# A quotient ``Z/k * Z/k -> H`` has a kernel generated by Schreier words.
# Putting the kernels of three pair quotients together gives a finite
# presentation; its abelianisation is read off a Smith normal form.

# %%
from triforge.fillings import classical_check, dihedral_quotient, emit_presentation, schreier_generators
from triforge.fillings.schreier import format_presentation
from triforge.smith import abelianization

# ## Dihedral quotients recover reflection triangle groups

# %%
d7 = dihedral_quotient(7)
print(schreier_generators(d7))
pres = emit_presentation(2, dihedral_quotient(2), dihedral_quotient(7), dihedral_quotient(3))
print(format_presentation(pres, 2))
print("H1:", abelianization(pres))

# %%
for lmr in [(2, 3, 7), (3, 3, 3), (5, 4, 2)]:
    print(lmr, classical_check(*lmr).passed)
