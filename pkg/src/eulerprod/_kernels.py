"""Compiled inner loops over machine words.

Residues mod q live in int64 arrays with values in ``[0, q)``.  Products are
reduced with a floating-point quotient estimate: the exact product wraps
around in int64, but the difference ``a*b - quot*q`` is small and wraps back
to the true remainder up to a few corrections.  This is exact as long as
``q < 2**56`` (see :data:`MAX_MODULUS`).
"""
import numpy as np
from numba import njit

MAX_MODULUS = 1 << 56


@njit(cache=True, nogil=True, inline="always")
def mulmod(a, b, q):
    quot = np.int64(float(a) * float(b) / float(q))
    r = a * b - quot * q
    while r < 0:
        r += q
    while r >= q:
        r -= q
    return r


@njit(cache=True, nogil=True, inline="always")
def mulmod_qi(a, b, q, qi):
    """:func:`mulmod` with a precomputed ``qi = 1.0 / q`` for hot loops."""
    quot = np.int64(float(a) * float(b) * qi)
    r = a * b - quot * q
    while r < 0:
        r += q
    while r >= q:
        r -= q
    return r


@njit(cache=True, nogil=True)
def powmod(a, e, q):
    r = np.int64(1)
    a = a % q
    while e > 0:
        if e & 1:
            r = mulmod(r, a, q)
        e >>= 1
        if e:
            a = mulmod(a, a, q)
    return r


@njit(cache=True, nogil=True)
def propagate_mod(a, ks, pes, ms, q):
    """``a[k] = a[pe] * a[m] mod q`` along a coprime decomposition table."""
    for t in range(ks.shape[0]):
        a[ks[t]] = mulmod(a[pes[t]], a[ms[t]], q)


@njit(cache=True, nogil=True)
def propagate_int(a, ks, pes, ms):
    """Integer version; returns the first index whose product would overflow, or -1."""
    lim = 9.0e18
    for t in range(ks.shape[0]):
        x = a[pes[t]]
        y = a[ms[t]]
        if abs(float(x) * float(y)) >= lim:
            return ks[t]
        a[ks[t]] = x * y
    return -1


@njit(cache=True, nogil=True)
def dilate(src, d, n):
    """``out[m] = src[m // d]`` when ``d | m``, else 0, for ``1 <= m <= n``."""
    out = np.zeros(n + 1, dtype=np.int64)
    j = 1
    m = d
    while m <= n:
        out[m] = src[j]
        j += 1
        m += d
    return out


@njit(cache=True, nogil=True)
def matvec_mod(B, cols, q):
    """``B @ cols`` mod q for ``B`` of shape (d, m) and ``cols`` of shape (m, L)."""
    d, m = B.shape
    L = cols.shape[1]
    out = np.zeros((d, L), dtype=np.int64)
    for i in range(d):
        for j in range(m):
            c = B[i, j]
            if c == 0:
                continue
            for t in range(L):
                s = out[i, t] + mulmod(c, cols[j, t], q)
                if s >= q:
                    s -= q
                out[i, t] = s
    return out


@njit(cache=True, nogil=True)
def seed_prime_powers_mod(a, primes, sigma, q):
    """Fill ``a[p^e]`` from ``h_e = sum_i (-1)^(i-1) sigma_i h_(e-i)`` mod q.

    ``sigma[t, i-1]`` holds ``sigma_i`` of the factor at ``primes[t]``.
    """
    n = a.shape[0]
    d = sigma.shape[1]
    h = np.zeros(64, dtype=np.int64)
    for t in range(primes.shape[0]):
        p = primes[t]
        h[0] = 1
        pe = p
        e = 1
        while pe < n:
            acc = np.int64(0)
            for i in range(1, min(e, d) + 1):
                term = mulmod(sigma[t, i - 1], h[e - i], q)
                if i % 2 == 1:
                    acc += term
                    if acc >= q:
                        acc -= q
                else:
                    acc -= term
                    if acc < 0:
                        acc += q
            h[e] = acc
            a[pe] = acc
            if pe > (n - 1) // p:
                break
            pe *= p
            e += 1


@njit(cache=True, nogil=True)
def seed_prime_powers_int(a, primes, sigma):
    """Integer version of :func:`seed_prime_powers_mod`; returns -1 or the overflowing index."""
    n = a.shape[0]
    d = sigma.shape[1]
    h = np.zeros(64, dtype=np.int64)
    lim = 4.0e18
    for t in range(primes.shape[0]):
        p = primes[t]
        h[0] = 1
        pe = p
        e = 1
        while pe < n:
            acc = np.int64(0)
            bound = 0.0
            for i in range(1, min(e, d) + 1):
                bound += abs(float(sigma[t, i - 1]) * float(h[e - i]))
                if i % 2 == 1:
                    acc += sigma[t, i - 1] * h[e - i]
                else:
                    acc -= sigma[t, i - 1] * h[e - i]
            if bound >= lim:
                return pe
            h[e] = acc
            a[pe] = acc
            if pe > (n - 1) // p:
                break
            pe *= p
            e += 1
    return -1


@njit(cache=True, nogil=True)
def divisor_counts(n):
    """``d(m)`` for ``0 <= m <= n`` (slot 0 unused)."""
    out = np.zeros(n + 1, dtype=np.int64)
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            out[m] += 1
    return out
