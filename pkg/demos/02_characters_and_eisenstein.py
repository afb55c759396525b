# Dirichlet characters, Bernoulli numbers and Eisenstein series.
from fractions import Fraction

from eulerprod import conrey_character, eisenstein_coeffs, find_fft_prime, gen_bernoulli
from eulerprod.chars import RingEmbedding, eis_constant_term, trivial_character

# Characters are exponent tables: chi(r) = zeta_o^t
psi = conrey_character(23, 5)
print(psi, "chi(5) = zeta^%d" % psi.exponent(5))
quad = conrey_character(23, 22)
print("quadratic mod 23, values at 1..10:",
      [1 if quad.exponent(r) == 0 else -1 for r in range(1, 11)])

# B_{1,chi} for the quadratic character is minus the class number of Q(sqrt -23)
print("B_1 =", gen_bernoulli(quad, 1))
print("B_2 for the trivial character:", gen_bernoulli(trivial_character(1), 2))

# The weight-one Eisenstein series attached to it, exactly
one = trivial_character(1)
e1 = eisenstein_coeffs(1, one, quad, 12, RingEmbedding.cyclotomic(2))
print("E_1 =", e1[0], "+", " + ".join(f"{c}q^{i}" if c != 1 else f"q^{i}" for i, c in enumerate(e1.tolist()) if i and c))

# Over a prime field every character of order dividing 22 embeds.
# Weight 2 needs an even character: chi_23(2) = psi^2 has order 11
even = conrey_character(23, 2)
prime = find_fft_prime(10 ** 5, (22,))
emb = prime.embedding(22)
a = eisenstein_coeffs(2, one, even, 10 ** 5, emb)
print("E_2^{1,chi} mod", prime.q, "at 1..4:", a.tolist()[1:5])

# Constant terms of the two series in the level-11 combination cancel
e2 = eis_constant_term(2, one, trivial_character(11))
e1 = eis_constant_term(1, one, conrey_character(11, 10))
print("constant terms:", e2, e1, "combination:", Fraction(-3, 2) * e2 + Fraction(5, 2) * e1 ** 2)
