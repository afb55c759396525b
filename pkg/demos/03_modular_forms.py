# Newform coefficients from products of Eisenstein series.
import time

import numpy as np

from eulerprod import load_decomposition, mf_coefficients
from eulerprod.bgform import hasse_bound

dec = load_decomposition("level11")
print(dec.description)
print("products:", dec.products, "coefficients:", dec.coefficients)

t0 = time.perf_counter()
res = mf_coefficients(dec, 10 ** 6)
print(f"a_p for p < 1e6 in {time.perf_counter() - t0:.2f} s with q = {res.prime.q}")
ap = dict(zip(res.indices.tolist(), res.values[0].tolist()))
print("a_2, a_3, a_5, a_7:", ap[2], ap[3], ap[5], ap[7])


# Compare with point counts on y^2 + y = x^3 - x^2 - 10x - 20
def count(p):
    x = np.arange(p, dtype=np.int64)
    r = (x * x % p * x - x * x - 10 * x - 20) % p
    d = (4 * r + 1) % p
    chi = np.array([0 if v == 0 else (1 if pow(int(v), (p - 1) // 2, p) == 1 else -1) for v in d])
    return p - (chi.sum() + p)


for p in (101, 997, 10007):
    print(f"p={p}: a_p={ap[p]}  p+1-#E={count(p)}")

# Quadratic Hecke field: coordinates on the basis 1, y with y^2 = 2
r43 = mf_coefficients("level43", 30).as_dict()
for p in (2, 3, 5, 7, 11, 13):
    c0, c1 = r43[p]
    print(f"level 43: a_{p} = {c0} + {c1}y")

b = hasse_bound((-2, 0, 1))
print("inverse embedding matrix: max entry", round(b.B_val, 6), "max row sum", round(b.row_sum, 6))

# All coefficients, then the Hecke relation a_4 = a_2^2 - 2
full = mf_coefficients("level11", 100, mode="all").values[0]
print("a_1..a_12:", full[:12].tolist(), " a_2^2 - 2 =", full[1] ** 2 - 2)
