# # From fillings to a hyperbolic triangle group with property (T)
#
# Three rotund fillings (link girth > 6) with the same k give a triangle
# complex of equilateral hyperbolic triangles with angle 2 pi / n.  If every
# link is also expansive, the group has property (T).

# %%
from triforge.fillings import assemble_triangle, certify_lps
from triforge.lps import scan_row

# ## Looking for rotund bipartite X^{17,q}

# %%
for q in (13, 29, 73, 269):
    row = scan_row(17, q)
    print(q, row["legendre"], row["girth"], "rotund" if row["rotund"] else "")

# ## Certificates and the assembly

# %%
cert = certify_lps(17, 269)
print(cert)
asm = assemble_triangle(cert, cert, cert)
print(asm.verdict, asm.t_basis, "theta =", asm.theta)

# A non-rotund filling is rejected, however good its spectral gap.

# %%
small = certify_lps(17, 5)
print(small.lambda1.status, assemble_triangle(small, cert, cert).verdict)
