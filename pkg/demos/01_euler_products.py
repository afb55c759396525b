# Expanding Euler products into Dirichlet coefficients.
#
# A multiplicative sequence is fixed by its values at prime powers, so the
# sieve table lists every other index as k = p^e * m with gcd(p, m) = 1 and
# each a_k costs one product a_{p^e} * a_m.
import numpy as np

from eulerprod import ConstantProvider, PolyProvider, expand, expand_precomp, rough_coprime_sieve
from eulerprod.rings import ZZ, CountingRing, OpCounter

t = rough_coprime_sieve(20)
print("primes below 20:", t.primes.tolist())
for k, pe, m in t.decomps:
    print(f"  {k} = {pe} * {m}")

# F_p = 1 - T at every prime gives zeta: all ones
print(expand(ConstantProvider([1, -1]), 12).tolist()[1:])

# F_p = 1 + T gives the Liouville function (-1)^Omega(n)
lam = np.array(expand(ConstantProvider([1, 1]), 10 ** 6).tolist()[1:])
print("Liouville, first ten:", lam[:10].tolist())
print("partial sum up to 1e6:", lam.sum())

# The newform of level 11 from its prime coefficients
ap = {2: -2, 3: -1, 5: 1, 7: -2, 11: 1, 13: 4, 17: -2, 19: 0}


def level11(p):
    if p == 11:
        return [1, -ap[p]]
    return [1, -ap[p], p]


print("level 11:", expand(PolyProvider(level11, ZZ, 2), 20).tolist()[1:])

# Count the ring work with an instrumented ring
for n in (10 ** 3, 10 ** 4, 10 ** 5):
    cnt = OpCounter()
    prov = PolyProvider(lambda p: [1, p % 5 - 2, p], ZZ, 2)
    expand_precomp(prov, rough_coprime_sieve(n + 1), ring=CountingRing(ZZ, cnt))
    print(f"n={n}: {cnt.muls} products, {cnt.adds} additions")
