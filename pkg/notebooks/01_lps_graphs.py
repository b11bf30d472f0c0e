# # LPS Ramanujan graphs from quaternions
#
# Four-square representations of a prime ``p = 1 mod 4`` give ``p + 1``
# quaternions; reducing them mod ``q`` gives a symmetric generating set of
# PGL2(q), and the Cayley graph is a ``(p+1)``-regular Ramanujan graph.

# %%
from triforge.arith import enumerate_S, legendre, r4_count, sqrt_minus_one
from triforge.graphs import connectivity_and_bipartition, girth
from triforge.lps import build_lps, generators_mod_q, girth_lazy, lps_girth_bound, rank_check

# ## Quaternions of norm p

# %%
p = 17
S = enumerate_S(p)
print(len(S), "quaternions of norm", p, "with x0 odd and positive")
print(list(S)[:4])
print("Jacobi count r4(17) =", r4_count(17), "= 8 * (17 + 1)")

# ## Matrices mod q

# %%
q = 5
print("eps =", int(sqrt_minus_one(q)), "; legendre(p, q) =", legendre(p, q))
for m in generators_mod_q(p, q)[:3]:
    print(m, "det", m.det())

# ## The graph X^{17,5}

# %%
lg = build_lps(17, 5)
g = lg.graph
connected, colour = connectivity_and_bipartition(g)
print(g.n, "vertices,", g.m, "edges, degree", g.regular_degree())
print("connected:", connected, "bipartite:", colour is not None, "girth:", girth(g))
print("rank check (computed, predicted, match):", rank_check(lg))

# ## Girth without building the graph
#
# The lazy search walks the Cayley graph from the identity over packed
# matrix codes, so X^{17,269} (about 1.9e7 vertices) never has to exist.

# %%
for q in (13, 73, 269):
    print(q, "girth", girth_lazy(17, q), "vs (4/3) log_p q =", round(lps_girth_bound(17, q), 3))
