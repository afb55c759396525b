from fractions import Fraction
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eulerprod.chars import (
    RingEmbedding,
    conrey_character,
    eis_constant_term,
    embed_values,
    gen_bernoulli,
    trivial_character,
)
from eulerprod.errors import IncompatiblePrimeError, InvalidArgument
from eulerprod.rings import CountingRing, OpCounter, PrimeField

from oracles import conrey_value_exponents, legendre


def all_characters(N):
    return [conrey_character(N, a) for a in range(1, N + 1) if gcd(a, N) == 1] if N > 1 else [conrey_character(1, 1)]


def bernoulli_oracle(N, values, k):
    """``B_{k,chi} = N^(k-1) sum_a chi(a) B_k(a/N)`` with Bernoulli polynomials (B_1 = +1/2)."""
    x = sympy.Symbol("x")
    Bk = sympy.bernoulli(k, x)
    total = sum(values[a % N] * Bk.subs(x, sympy.Rational(a, N)) for a in range(1, N + 1))
    total = sympy.nsimplify(sympy.expand(total * N ** (k - 1)))
    return Fraction(int(total.p), int(total.q))


def kronecker(D, r):
    """``(D / r)`` for odd ``r > 0``: the Jacobi symbol."""
    return 1 if r == 1 else int(sympy.jacobi_symbol(D % r, r))


def test_trivial_character():
    chi = conrey_character(12, 1)
    assert chi.order == 1 and chi.is_trivial
    assert [chi.exponent(r) for r in range(12)] == [0 if gcd(r, 12) == 1 else -1 for r in range(12)]


def test_order_two_mod_11_is_legendre():
    chi = conrey_character(11, -1)
    assert chi.order == 2 and chi.parity == -1
    for r in range(1, 11):
        assert (1 if chi.exponent(r) == 0 else -1) == legendre(r, 11)


def test_mod_23_index_5():
    chi = conrey_character(23, 5)
    assert chi.order == 22 and chi.exponent(5) == 1


def test_prime_moduli_match_discrete_log_oracle():
    for p in [3, 5, 7, 11, 13, 23, 29, 31, 37]:
        for a in range(1, p):
            want, o = conrey_value_exponents(p, a)
            chi = conrey_character(p, a)
            for r, t in want.items():
                # exponents of zeta_(p-1), rescaled to the character order
                assert t * chi.order % o == 0
                assert chi.exponent(r) == t * chi.order // o


def test_mod_8_labels():
    # 8.3 is the character of Q(sqrt(-2)), 8.5 of Q(sqrt 2), 8.7 the lift of the one mod 4
    kron = {3: -8, 5: 8, 7: -4}
    for a, D in kron.items():
        chi = conrey_character(8, a)
        for r in (1, 3, 5, 7):
            v = 1 if chi.exponent(r) == 0 else -1
            assert v == kronecker(D, r)


def test_crt_factorisation():
    for N1, N2 in [(5, 7), (3, 8), (4, 9), (7, 16)]:
        N = N1 * N2
        for a in [x for x in range(1, N) if gcd(x, N) == 1][:12]:
            chi = conrey_character(N, a)
            c1, c2 = conrey_character(N1, a % N1), conrey_character(N2, a % N2)
            for r in range(N):
                if gcd(r, N) != 1:
                    assert chi.exponent(r) == -1
                    continue
                lhs = Fraction(chi.exponent(r), chi.order)
                rhs = Fraction(c1.exponent(r), c1.order) + Fraction(c2.exponent(r), c2.order)
                assert (lhs - rhs).denominator == 1


@pytest.mark.parametrize("N", range(1, 101))
def test_multiplicativity_and_orthogonality(N):
    units = [r for r in range(N) if gcd(r, N) == 1] if N > 1 else [0]
    for chi in all_characters(N):
        tab = chi.log_table
        o = chi.order
        assert chi.exponent(1) == 0
        for r in range(N):
            assert (tab[r] < 0) == (gcd(r, N) != 1)
        u = np.array(units)
        prod = (u[:, None] * u[None, :]) % N
        assert np.all((tab[u][:, None] + tab[u][None, :]) % o == tab[prod])
        if not chi.is_trivial:
            s = np.exp(2j * np.pi * tab[u] / o).sum()
            assert abs(s) < 1e-9
        assert chi.exponent(N - 1) in (0, o // 2) if N > 2 else True


def test_rejects_non_unit():
    with pytest.raises(InvalidArgument):
        conrey_character(10, 4)


def test_embed_values():
    emb = RingEmbedding.prime_field(67, 22)
    chi = conrey_character(23, 22)
    vals = embed_values(chi, emb)
    assert [0 if v == 0 else (1 if v == 1 else -1) for v in vals] == [legendre(r, 23) for r in range(23)]
    full = embed_values(conrey_character(23, 5), emb)
    assert len({v for v in full if v}) == 22
    with pytest.raises(IncompatiblePrimeError):
        RingEmbedding.prime_field(53, 22)
    with pytest.raises(IncompatiblePrimeError):
        embed_values(conrey_character(23, 5), RingEmbedding.prime_field(53, 2))


def test_power_table_cost_is_below_order():
    cnt = OpCounter()
    emb = RingEmbedding.prime_field(67, 22)
    embed_values(conrey_character(23, 5), emb, CountingRing(PrimeField(67), cnt))
    assert cnt.muls < 22


def test_bernoulli_examples():
    assert gen_bernoulli(trivial_character(1), 2) == Fraction(1, 6)
    assert gen_bernoulli(trivial_character(1), 1) == Fraction(1, 2)
    assert gen_bernoulli(conrey_character(4, 3), 1) == Fraction(-1, 2)
    assert gen_bernoulli(conrey_character(5, 4), 1) == 0
    assert gen_bernoulli(conrey_character(23, 22), 1) == -3


@pytest.mark.parametrize("N,a", [(1, 1), (4, 3), (5, 4), (7, 6), (8, 5), (11, 1), (12, 11), (23, 22), (24, 5)])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_bernoulli_against_polynomial_formula(N, a, k):
    chi = conrey_character(N, a)
    vals = [0 if t < 0 else (1 if t == 0 else -1) for t in chi.log_table.tolist()]
    assert gen_bernoulli(chi, k) == bernoulli_oracle(N, vals, k)


def test_bernoulli_complex_character_matches_numeric():
    chi = conrey_character(7, 3)
    emb = RingEmbedding.cyclotomic(chi.order)
    B = gen_bernoulli(chi, 1, emb)
    zeta = np.exp(2j * np.pi / chi.order)
    got = sum(complex(float(c)) * zeta ** i for i, c in enumerate(B))
    want = sum(chi(a) * (a / 7 - 0.5) for a in range(1, 8))
    assert abs(got - want) < 1e-12


def test_constant_terms():
    one = trivial_character(1)
    psi23 = conrey_character(23, 22)
    assert eis_constant_term(1, one, psi23) == Fraction(3, 2)
    assert eis_constant_term(2, conrey_character(5, 4), conrey_character(7, 6)) == 0
    assert eis_constant_term(4, one, one) == Fraction(1, 240)


def test_level_11_constant_cancels():
    one = trivial_character(1)
    e2 = eis_constant_term(2, one, trivial_character(11))
    e1 = eis_constant_term(1, one, conrey_character(11, 10))
    assert e2 == Fraction(5, 12) and e1 == Fraction(1, 2)
    assert Fraction(-3, 2) * e2 + Fraction(5, 2) * e1 * e1 == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 400), st.data())
def test_conjugate_inverts(N, data):
    a = data.draw(st.sampled_from([x for x in range(1, N) if gcd(x, N) == 1]))
    chi = conrey_character(N, a)
    bar = chi.conjugate()
    u = chi.log_table >= 0
    assert bar.order == chi.order
    assert np.all((chi.log_table[u] + bar.log_table[u]) % chi.order == 0)
