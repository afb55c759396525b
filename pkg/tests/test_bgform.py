import json
import math
from importlib import resources

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from eulerprod.bgform import (
    BUNDLED,
    crt_combine,
    expand_operator,
    hasse_bound,
    lift_balanced,
    load_decomposition,
    mf_coefficients,
    multiplicative_extend,
)
from eulerprod.chars import conrey_character, trivial_character
from eulerprod.eis import eisenstein_coeffs
from eulerprod.errors import DecompositionError, IntegrityError, InvalidArgument, LiftError
from eulerprod.ntt import find_fft_prime
from eulerprod.rings import ZZ, QuotientRing

from oracles import count_points_11a, eta_11_coefficients

PREFIXES = {
    "level11": {2: (-2,), 3: (-1,), 5: (1,), 7: (-2,)},
    "level43": {2: (0, 1), 3: (0, -1), 5: (2, -1)},
    "level35f": {3: (1,), 5: (-1,), 7: (1,)},
    "level32": {5: (-2,), 13: (6,)},
}


def raw(name):
    return json.loads(resources.files("eulerprod").joinpath("data", f"{name}.json").read_text())


@pytest.fixture(scope="module")
def level11_all():
    return mf_coefficients("level11", 10 ** 5, mode="all")


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_self_certify(name):
    res = mf_coefficients(name, 200)
    dec = res.decomposition
    assert res.header_checked == tuple(sorted(dec.header_coords()))
    got = mf_coefficients(name, max(dec.header_coords()), mode="all").as_dict()
    for i, v in dec.header_coords().items():
        assert got[i] == tuple(v)


@pytest.mark.parametrize("name", sorted(PREFIXES))
def test_printed_prime_coefficients(name):
    got = mf_coefficients(name, 20).as_dict()
    for p, v in PREFIXES[name].items():
        assert got[p] == v


def test_level35f_full_prefix():
    got = mf_coefficients("level35f", 9, mode="all").as_dict()
    assert [got[i][0] for i in range(1, 10)] == [1, 0, 1, -2, -1, 0, 1, 0, -2]


def test_level11_matches_eta_product(level11_all):
    eta = eta_11_coefficients(10 ** 5)
    assert np.array_equal(level11_all.values[0], eta[1:])


def test_level11_point_counts_near_one_million():
    n = 10 ** 6 + 200
    res = mf_coefficients("level11", n)
    got = dict(zip(res.indices.tolist(), res.values[0].tolist()))
    primes = list(sympy.primerange(10 ** 6, n))[:10]
    assert 10 ** 6 + 3 in primes
    for p in primes:
        assert got[p] == count_points_11a(p)
    for p in sympy.primerange(13, 500):
        assert got[p] == count_points_11a(p)


def _hecke_check(name, n=10 ** 4):
    res = mf_coefficients(name, n, mode="all")
    dec = res.decomposition
    S = QuotientRing(dec.minpoly if dec.minpoly else (0, 1), ZZ, "y")
    a = {int(i): S(tuple(int(x) for x in res.values[:, t])) for t, i in enumerate(res.indices.tolist())}
    chi = dec.nebentypus_character()
    for p in sympy.primerange(2, 100):
        if dec.level % p == 0:
            continue
        c = chi.exponent(p)
        cp = (1 if c == 0 else -1) * p ** (dec.weight - 1)
        assert a[p * p] == S.sub(S.mul(a[p], a[p]), S(cp)), (name, p)
        for m in range(2, n // p + 1):
            if m % p:
                assert a[p * m] == S.mul(a[p], a[m]), (name, p, m)


@pytest.mark.parametrize("name", ["level11", "level23", "level35f", "level35g", "level43"])
def test_hecke_relations(name):
    _hecke_check(name)


def test_two_primes_agree():
    for name in ("level11", "level43", "level35g"):
        dec = load_decomposition(name)
        runs = [mf_coefficients(name, 10 ** 4, prime=find_fft_prime(10 ** 4 + 1, (dec.order(),), skip=s), mode="all")
                for s in (0, 1)]
        assert runs[0].prime.q != runs[1].prime.q
        assert np.array_equal(runs[0].values, runs[1].values)


def test_corrupted_decomposition_fails_header():
    data = raw("level11")
    data["coefficients"] = ["-3/2", "7/2"]
    with pytest.raises(IntegrityError):
        mf_coefficients(data, 50)
    data["header"] = {"1": 1, "2": -2}
    data["coefficients"] = ["-3/2", "5/2"]
    mf_coefficients(data, 50)
    data["header"] = {"1": 2}
    with pytest.raises(DecompositionError):
        load_decomposition(data)


def test_matrix_field_and_header_length():
    data = raw("level43")
    del data["coefficients"]
    data["matrix"] = [["-1/2", "5/6", "2/3"], ["1/2", "1/2", "-1"]]
    data["header"] = {"length": 3, "coeffs": [[1, 0], [0, 1], [0, -1]]}
    res = mf_coefficients(data, 10)
    assert res.as_dict()[5] == (2, -1)


def test_loader_rejects_bad_input():
    with pytest.raises(InvalidArgument):
        load_decomposition("no-such-file")
    with pytest.raises(DecompositionError):
        load_decomposition("{not json")
    data = raw("level11")
    data["products"][0][1] = 9
    with pytest.raises(DecompositionError):
        load_decomposition(data)
    data = raw("level11")
    data["coefficients"] = ["__import__('os')", "1"]
    with pytest.raises(DecompositionError):
        mf_coefficients(data, 10)


def test_expand_operator():
    seq = np.arange(0, 8)
    assert expand_operator(seq, 1, 5).tolist() == [0, 1, 2, 3, 4, 5]
    assert expand_operator(seq, 2, 6).tolist()[1:] == [0, 1, 0, 2, 0, 3]
    prime = find_fft_prime(100, (12,))
    emb = prime.embedding(12)
    e2 = eisenstein_coeffs(2, trivial_character(1), conrey_character(35, 1), 20, emb).values
    assert expand_operator(e2, 5, 100)[10] == e2[2]
    with pytest.raises(InvalidArgument):
        expand_operator(seq, 0, 5)


def test_hasse_bounds():
    assert hasse_bound(None).B_val == 1.0
    b = hasse_bound((-2, 0, 1))
    assert 0.5 <= b.B_val < 0.5 + 1e-9
    assert 1.0 <= b.row_sum < 1.0 + 1e-9
    r = math.sqrt(17)
    b17 = hasse_bound((-4, -1, 1))
    assert (1 + r) / 2 / r <= b17.B_val < (1 + r) / 2 / r + 1e-9
    assert b17.B_val >= 1 / 2


def test_lift_examples():
    q = 97
    assert lift_balanced([q - 2, 0, 48, 49], None, q).tolist() == [-2, 0, 48, -48]
    assert lift_balanced([q - 2], [40], q).tolist() == [-2]
    with pytest.raises(LiftError) as err:
        lift_balanced([1, 2, 3], [1, 10, 60], q)
    assert err.value.index == 2 and err.value.q == q
    hb = hasse_bound((-2, 0, 1))
    with pytest.raises(LiftError):
        lift_balanced([[1], [1]], [48], q, hb)


def test_crt_examples():
    q1, q2 = 1000003, 998244353
    assert crt_combine([(q1, [5, q1 - 7])]) == [5, -7]
    assert crt_combine([(q1, [5]), (q2, [5])]) == [5]
    V = -(q1 * q2 // 2) + 12345
    assert crt_combine([(q1, [V % q1]), (q2, [V % q2])]) == [V]
    with pytest.raises(IntegrityError):
        crt_combine([(q1, [V % q1]), (q2, [V % q2])], bound=10 ** 6)
    with pytest.raises(InvalidArgument):
        crt_combine([(q1, [1]), (q1, [1])])


@settings(max_examples=50, deadline=None)
@given(st.integers(-(10 ** 17), 10 ** 17))
def test_crt_recovers_values(V):
    qs = [find_fft_prime(10, skip=s).q for s in range(2)]
    assert crt_combine([(q, [V % q]) for q in qs]) == [V]


def test_multiplicative_extend_level11():
    aps = {p: count_points_11a(p) if p != 11 else 1 for p in sympy.primerange(2, 2001)}
    chi = conrey_character(11, 1)
    seq = multiplicative_extend(aps, 2, chi, {11: [1, -1]}, 2000)
    assert seq.tolist()[1:11] == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2]
    assert seq[4] == aps[2] ** 2 - 2
    assert np.array_equal(np.array(seq.tolist()[1:]), eta_11_coefficients(2000)[1:])
    assert multiplicative_extend({}, 2, chi, {}, 1).tolist()[1:] == [1]
    with pytest.raises(InvalidArgument) as err:
        multiplicative_extend(aps, 2, chi, {}, 100)
    assert "11" in str(err.value)


def test_extend_from_mf_result():
    res = mf_coefficients("level43", 500)
    full = mf_coefficients("level43", 500, mode="all")
    ext = res.extend()
    S = QuotientRing((-2, 0, 1), ZZ, "y")
    for t, i in enumerate(full.indices.tolist()):
        assert ext[i] == S(tuple(int(x) for x in full.values[:, t]))


def test_threads_give_same_result():
    a = mf_coefficients("level35f", 5000, threads=1)
    b = mf_coefficients("level35f", 5000, threads=4)
    assert np.array_equal(a.values, b.values)


def test_unlifted_residues():
    res = mf_coefficients("level11", 100, lift=False)
    assert res.values is None
    with pytest.raises(InvalidArgument):
        res.as_dict()
