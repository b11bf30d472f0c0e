# # Exact spectral certificates
#
# ``lambda_1 > 1/2`` for a connected k-regular graph means every adjacency
# eigenvalue except k is below k/2.  That is an inertia statement about
# ``A - (k/2) I`` and can be decided exactly with fraction-free elimination.

# %%
from fractions import Fraction

import numpy as np

from triforge.graphs import MultiGraph
from triforge.lps import build_lps
from triforge.spectral import (
    certify_expansive,
    certify_ramanujan,
    inertia,
    lambda1,
    ramanujan_margin,
)

# ## The boundary case: the 6-cycle
#
# Its eigenvalues are 2 cos(2 pi j / 6), so 1 = k/2 is an eigenvalue and
# lambda_1 is exactly 1/2.  Floating point cannot decide a strict inequality
# here; inertia reports a zero eigenvalue of the shifted matrix.

# %%
c6 = MultiGraph(6, np.array([[i, (i + 1) % 6] for i in range(6)]))
print(lambda1(c6))
print(certify_expansive(c6))

# ## X^{17,5}

# %%
g = build_lps(17, 5).graph
print("lambda1 (float):", lambda1(g))
print("expansive:", certify_expansive(g).status)
print("Ramanujan:", certify_ramanujan(g).status)
print("Ramanujan bound on lambda1 for k = 18:", ramanujan_margin(18))

# ## Inertia at an arbitrary rational shift

# %%
a = g.adjacency_matrix()
for shift in (Fraction(9), Fraction(17, 3), Fraction(-9)):
    print(shift, inertia(a, shift))

# ## Which degrees make Ramanujan imply expansive?

# %%
print([k for k in range(3, 30) if ramanujan_margin(k) > 0.5])
