# # Random quotients of Z/k * Z/k in SL2(p)
#
# Each trial picks two random elements of order k and records girth and
# lambda_1 of the link graph of the kernel, next to the benchmark
# ln|V| / (3 ln(k - 1)).

# %%
from triforge.fillings import varju_sample

report = varju_sample(19, 5, seed=1, trials=20)
print("girth histogram:", report.girth_histogram)
for row in report.c_grid:
    print(row)
for r in report.records[:5]:
    print(r.trial, r.group_order, r.vertices, r.girth, round(r.lambda1, 4), round(r.girth_benchmark, 3))
