import random
from fractions import Fraction
from math import gcd, isqrt

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eulerprod.chars import RingEmbedding, conrey_character, trivial_character
from eulerprod.eis import eisenstein_coeffs
from eulerprod.errors import InvalidArgument
from eulerprod.lprod import (
    ArithmeticObject,
    dirichlet_direct_sum,
    dirichlet_sym_power,
    dirichlet_tensor,
    objects_from_bg,
    triple_product,
    triple_product_bad_factor,
)
from eulerprod.rings import ZZ

from oracles import count_points_11a, series_inverse

TRIPLE_PREFIX = [1, 0, -4, 8, -11, 0, 15, 0, 13, 0, 12, -32, 10]


def level11(n=3000):
    aps = {p: (count_points_11a(p) if p != 11 else 1) for p in sympy.primerange(2, n + 1)}
    return ArithmeticObject.modular(aps, 2, conrey_character(11, 1), 11, name="11a")


def random_weight2(seed, n):
    rng = random.Random(seed)
    aps = {p: rng.randint(-isqrt(4 * p), isqrt(4 * p)) for p in sympy.primerange(2, n + 1)}
    return ArithmeticObject.modular(aps, 2, trivial_character(1), 1), aps


def dirichlet_mul(a, b):
    n = len(a) - 1
    out = [0] * (n + 1)
    for i in range(1, n + 1):
        if a[i]:
            for j in range(1, n // i + 1):
                out[i * j] += a[i] * b[j]
    return out


def test_zeta_direct_sum_is_divisor_count():
    z = ArithmeticObject.zeta()
    seq = dirichlet_direct_sum([z, z], 500).tolist()
    assert seq[1:] == [int(sympy.divisor_count(m)) for m in range(1, 501)]


def test_unit_and_zeta_are_neutral():
    f = level11()
    base = dirichlet_tensor([f], 2000).tolist()
    assert dirichlet_direct_sum([f, ArithmeticObject.unit()], 2000).tolist() == base
    assert dirichlet_tensor([f, ArithmeticObject.zeta()], 2000).tolist() == base
    assert base[1:11] == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2]


def test_characters_reproduce_eisenstein():
    phi, psi = conrey_character(5, 4), conrey_character(8, 5)
    for k in (1, 2, 3):
        objs = [ArithmeticObject.character(phi), ArithmeticObject.character(psi, k - 1)]
        seq = dirichlet_direct_sum(objs, 1000).tolist()
        eis = eisenstein_coeffs(k, phi, psi, 1000, RingEmbedding.cyclotomic(2), constant=False).tolist()
        assert seq[1:] == [int(v) for v in eis[1:]]


def test_degree_one_tensor_is_pointwise():
    chis = [conrey_character(12, 5), conrey_character(7, 6), conrey_character(1, 1)]
    objs = [ArithmeticObject.character(c, s) for c, s in zip(chis, (0, 1, 2))]
    n = 10 ** 4
    a = [dirichlet_tensor([o], n).tolist() for o in objs]
    t = dirichlet_tensor(objs, n).tolist()
    assert t == [x * y * z for x, y, z in zip(*a)]


def test_tensor_needs_overrides_where_two_objects_ramify():
    f = level11()
    with pytest.raises(InvalidArgument) as err:
        dirichlet_tensor([f, f], 100)
    assert "11" in str(err.value)
    dirichlet_tensor([f, f], 100, overrides={11: [1, -1]})
    dirichlet_tensor([f, f], 10)  # 11 is beyond the length


def test_rankin_selberg_identity():
    n = 2000
    f, af = random_weight2(1, n)
    g, ag = random_weight2(2, n)
    ff = dirichlet_tensor([f], n).tolist()
    gg = dirichlet_tensor([g], n).tolist()
    pointwise = [x * y for x, y in zip(ff, gg)]
    zeta2 = [0] * (n + 1)  # zeta(2s - 2): m^2 at index m^2
    for m in range(1, isqrt(n) + 1):
        zeta2[m * m] = m * m
    assert dirichlet_mul(zeta2, pointwise) == dirichlet_tensor([f, g], n).tolist()


def test_artin_formalism_on_coefficients():
    n = 1500
    f, af = random_weight2(3, n)
    g, ag = random_weight2(4, n)
    h, ah = random_weight2(5, n)

    def sum_local(p):
        a = [1, -af[p], p]
        b = [1, -ag[p], p]
        return [sum(a[i] * b[j - i] for i in range(len(a)) if 0 <= j - i < len(b)) for j in range(5)]

    fg = ArithmeticObject(4, 1, sum_local)
    lhs = dirichlet_tensor([fg, h], n).tolist()
    rhs = dirichlet_mul(dirichlet_tensor([f, h], n).tolist(), dirichlet_tensor([g, h], n).tolist())
    assert lhs == rhs


def test_sym_power_examples():
    f = level11()
    n = 2000
    assert dirichlet_sym_power(f, 1, n).tolist() == dirichlet_tensor([f], n).tolist()
    s2 = dirichlet_sym_power(f, 2, n).tolist()
    for p in sympy.primerange(2, 200):
        if p != 11:
            assert s2[p] == f.aps[p] ** 2 - p
    assert s2[2] == 2 and s2[3] == -2
    assert s2[11] == 1
    for p in (2, 3, 5, 7):
        a = f.aps[p]
        c = [1, -(a * a - p), p * a * a - p * p, -p ** 3]
        inv = series_inverse(c, 5)
        pe = p
        for e in range(1, 5):
            if pe <= n:
                assert s2[pe] == inv[e]
            pe *= p
    assert s2[1:6] == [1, 2, -2, 0, -4]


def test_sym_power_against_rational_roots():
    # F_p = (1 - 2T)(1 - 3T) at every prime: Sym^3 has roots 8, 12, 18, 27
    obj = ArithmeticObject(2, 0, lambda p: [1, -5, 6])
    seq = dirichlet_sym_power(obj, 3, 64).tolist()
    c = [int(x) for x in sympy.Poly(sympy.expand((1 - 8 * sympy.Symbol("T")) * (1 - 12 * sympy.Symbol("T"))
                                                 * (1 - 18 * sympy.Symbol("T")) * (1 - 27 * sympy.Symbol("T"))),
                                    sympy.Symbol("T")).all_coeffs()[::-1]]
    inv = series_inverse(c, 7)
    assert [seq[2 ** e] for e in range(1, 7)] == inv[1:7]
    assert seq[6] == inv[1] * inv[1]


def test_ramanujan_bound_level11():
    f = level11(3000)
    for p, a in f.aps.items():
        if p != 11:
            assert a * a <= 4 * p


def test_bad_factor_examples():
    T = sympy.Symbol("T")

    def coeffs(expr):
        return [int(c) for c in sympy.Poly(sympy.expand(expr), T).all_coeffs()[::-1]]

    assert triple_product_bad_factor(0, 1, 1, 5) == [1, 0, 0, 0]
    assert triple_product_bad_factor(-1, 1, 1, 5) == coeffs((1 + T) * (1 + 5 * T) ** 2)
    assert triple_product_bad_factor(1, -1, -1, 7) == coeffs((1 - T) * (1 - 7 * T) ** 2)
    a = -1
    assert triple_product_bad_factor(a, 1, 1, 5, form="printed") == [1, -a, -5 * a, 5 * a * a]
    with pytest.raises(InvalidArgument):
        triple_product_bad_factor(1, 1, 1, 5, form="other")


@pytest.fixture(scope="module")
def level35():
    f = objects_from_bg("level35f", 200)
    g = objects_from_bg("level35g", 200)
    return f, g, g.conjugate()


def test_level35_objects(level35):
    f, g, h = level35
    assert f.aps[5] == -1 and f.aps[7] == 1
    S = g.ring
    assert g.aps[5] == S(1) and g.aps[7] == S(-1)
    assert h.aps[2] == S.conjugate(g.aps[2])


def test_triple_product_prefix(level35):
    f, g, h = level35
    assert triple_product(f, g, h, 35, 13).tolist()[1:] == TRIPLE_PREFIX
    seq = triple_product(f, g, h, 35, 150).tolist()
    assert all(isinstance(v, int) for v in seq)
    printed = triple_product(f, g, h, 35, 13, form="printed").tolist()
    assert printed[5] == -1 and printed[7] == 1


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.lists(st.integers(-3, 3), min_size=1, max_size=2))
def test_direct_sum_is_dirichlet_product(fc, gc):
    f = ArithmeticObject(2, 0, lambda p: [1] + fc)
    g = ArithmeticObject(len(gc), 0, lambda p: [1] + gc)
    n = 300
    assert dirichlet_direct_sum([f, g], n).tolist() == dirichlet_mul(
        dirichlet_tensor([f], n).tolist(), dirichlet_tensor([g], n).tolist())
