"""Fourier coefficients of Eisenstein series ``E_k^{phi,psi}``.

``a_m = sum_{d | m} phi(m/d) psi(d) d^(k-1)`` is multiplicative with local
factor ``(1 - phi(p) T)(1 - psi(p) p^(k-1) T)``, so the coefficients follow
from one Euler-product expansion: at each prime ``x = psi(p) p^(k-1)`` and
``h_e = x h_(e-1) + phi(p^e)``, then one product per composite index.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from . import _kernels as K
from .chars import DirichletCharacter, RingEmbedding, eis_constant_term, embed_values
from .errors import InvalidArgument
from .euler import CoeffSeq
from .rings import CountingRing, PrimeField, underlying
from .sieve import CoprimeTable, rough_coprime_sieve


@njit(cache=True, nogil=True)
def _eis_mod(n, k, vphi, vpsi, primes, ks, pes, ms, q):
    a = np.zeros(n + 1, dtype=np.int64)
    a[1] = 1
    Nphi = vphi.shape[0]
    Npsi = vpsi.shape[0]
    for t in range(primes.shape[0]):
        p = primes[t]
        if p > n:
            break
        x = vpsi[p % Npsi]
        if k > 1 and x != 0:
            x = K.mulmod(x, K.powmod(p, k - 1, q), q)
        pe = p
        h = np.int64(1)
        while True:
            h = K.mulmod(x, h, q) + vphi[pe % Nphi]
            if h >= q:
                h -= q
            a[pe] = h
            if pe > n // p:
                break
            pe *= p
    for t in range(ks.shape[0]):
        k_ = ks[t]
        if k_ > n:
            break
        a[k_] = K.mulmod(a[pes[t]], a[ms[t]], q)
    return a


def _check(k, n):
    if k < 1:
        raise InvalidArgument(f"weight must be >= 1, got {k}")
    if n < 1:
        raise InvalidArgument(f"length must be >= 1, got {n}")


def eisenstein_coeffs(k: int, phi: DirichletCharacter, psi: DirichletCharacter, n: int,
                      embedding: RingEmbedding, table: CoprimeTable | None = None,
                      ring=None, constant: bool = True) -> CoeffSeq:
    """``a_0..a_n`` of ``E_k^{phi,psi}`` in ``embedding.ring``.

    ``ring`` may be a :class:`CountingRing` over ``embedding.ring`` to count
    operations; the compiled path is used for prime fields otherwise.  With
    ``constant`` the index-0 slot holds the constant term, else zero.
    """
    _check(k, n)
    if table is None:
        table = rough_coprime_sieve(n + 1)
    if table.n < n + 1:
        raise InvalidArgument(f"sieve table covers indices < {table.n}, need {n + 1}")
    R = ring if ring is not None else embedding.ring
    base = underlying(R)
    counting = isinstance(R, CountingRing)

    if not counting and isinstance(base, PrimeField) and base.q < K.MAX_MODULUS:
        vphi = np.array(embed_values(phi, embedding), dtype=np.int64)
        vpsi = np.array(embed_values(psi, embedding), dtype=np.int64)
        a = _eis_mod(n, k, vphi, vpsi, table.primes, table.decomp_k, table.decomp_pe, table.decomp_m, base.q)
        if constant:
            a[0] = eis_constant_term(k, phi, psi, embedding)
        return CoeffSeq(R, a, {"kind": "eisenstein", "k": k})

    vphi = embed_values(phi, embedding, R)
    vpsi = embed_values(psi, embedding, R)
    Nphi, Npsi = phi.modulus, psi.modulus
    a = [R.zero] * (n + 1)
    a[1] = R.one
    is_zero = R.is_zero
    for p in table.primes.tolist():
        if p > n:
            break
        x = vpsi[p % Npsi]
        if k > 1 and not is_zero(x):
            x = R.mul_int(x, pow(p, k - 1))
        pe, h = p, None
        while True:
            f = vphi[pe % Nphi]
            if h is None:
                h = x if is_zero(f) else (f if is_zero(x) else R.add(x, f))
            else:
                h = R.mul(x, h) if not is_zero(x) else R.zero
                if not is_zero(f):
                    h = f if is_zero(h) else R.add(h, f)
            a[pe] = h
            if pe > n // p:
                break
            pe *= p
    mul = R.mul
    for kk, pe, m in zip(table.decomp_k.tolist(), table.decomp_pe.tolist(), table.decomp_m.tolist()):
        if kk > n:
            break
        a[kk] = mul(a[pe], a[m])
    if constant:
        a[0] = eis_constant_term(k, phi, psi, RingEmbedding(base, embedding.order, embedding.zeta))
    return CoeffSeq(R, a, {"kind": "eisenstein", "k": k})


def eisenstein_coeffs_naive(k: int, phi: DirichletCharacter, psi: DirichletCharacter, n: int,
                            embedding: RingEmbedding, constant: bool = True) -> CoeffSeq:
    """Divisor-sum oracle: ``a_m = sum_{d | m} phi(m/d) psi(d) d^(k-1)``."""
    _check(k, n)
    R = embedding.ring
    vphi = embed_values(phi, embedding)
    vpsi = embed_values(psi, embedding)
    a = [R.zero] * (n + 1)
    for d in range(1, n + 1):
        c = vpsi[d % psi.modulus]
        if R.is_zero(c):
            continue
        c = R.mul(c, R(pow(d, k - 1)))
        for j in range(1, n // d + 1):
            f = vphi[j % phi.modulus]
            if not R.is_zero(f):
                a[d * j] = R.add(a[d * j], R.mul(f, c))
    if constant:
        a[0] = eis_constant_term(k, phi, psi, embedding)
    return CoeffSeq(R, a, {"kind": "eisenstein", "k": k, "path": "naive"})
