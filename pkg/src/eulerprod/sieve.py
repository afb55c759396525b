"""Primes and coprime factorisations of every index below ``n``.

The rough-coprime sieve walks a doubly linked list of the odd integers.  When
prime ``p`` is processed the list holds exactly the integers whose prime
factors are all ``>= p``; each ``p^e * m`` built from a surviving ``m`` is
recorded as ``k = p^e * m`` and unlinked, so every node is removed at most
once and the total work is linear in ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import CapacityError, InvalidArgument

MAX_SIEVE = 1 << 34


@njit(cache=True, nogil=True)
def _rough_sieve(n):
    # node i <-> odd integer 2i+1; index `size` is the tail sentinel
    size = (n + 1) // 2
    nxt = np.empty(size + 1, dtype=np.int64)
    prv = np.empty(size + 1, dtype=np.int64)
    for i in range(size + 1):
        nxt[i] = i + 1
        prv[i] = i - 1
    pe_of = np.zeros(n, dtype=np.int64)
    m_of = np.zeros(n, dtype=np.int64)
    is_pp = np.zeros(n, dtype=np.bool_)
    primes = np.empty(max(16, n // 2), dtype=np.int64)
    nprimes = 0
    unlinks = 0

    if n > 2:
        primes[0] = 2
        nprimes = 1
        pe = 2
        while pe < n:
            is_pp[pe] = True
            pe *= 2
        m = 3
        while 2 * m < n:
            pe = 2
            while pe * m < n:
                pe_of[pe * m] = pe
                m_of[pe * m] = m
                pe *= 2
            m += 2

    while True:
        i = nxt[0]
        if i >= size:
            break
        p = 2 * i + 1
        if p >= n:
            break
        primes[nprimes] = p
        nprimes += 1
        if p * p >= n:
            # every survivor above p is prime: no composite has p as least factor
            j = nxt[i]
            is_pp[p] = True
            while j < size and 2 * j + 1 < n:
                q = 2 * j + 1
                primes[nprimes] = q
                nprimes += 1
                is_pp[q] = True
                j = nxt[j]
            break
        pe = p
        while pe < n:
            is_pp[pe] = True
            j = pe // 2
            nxt[prv[j]] = nxt[j]
            prv[nxt[j]] = prv[j]
            unlinks += 1
            pe *= p
        # m runs over p-rough survivors; p^e*m > m is unlinked before m reaches it
        j = nxt[0]
        while j < size:
            m = 2 * j + 1
            if p * m >= n:
                break
            pe = p
            while pe * m < n:
                k = pe * m
                pe_of[k] = pe
                m_of[k] = m
                kj = k // 2
                nxt[prv[kj]] = nxt[kj]
                prv[nxt[kj]] = prv[kj]
                unlinks += 1
                pe *= p
            j = nxt[j]

    ks = np.nonzero(pe_of)[0]
    return primes[:nprimes].copy(), ks, pe_of[ks], m_of[ks], is_pp, unlinks


@dataclass(frozen=True)
class CoprimeTable:
    """Primes below ``n`` and one rough-coprime factorisation per composite.

    ``decomp_k``, ``decomp_pe`` and ``decomp_m`` are parallel arrays sorted by
    ``k``: ``k = pe * m`` with ``pe`` the full power of the least prime factor
    of ``k`` and every prime factor of ``m`` larger than that prime.  Prime
    powers are not listed there; see :attr:`prime_powers`.
    """

    n: int
    primes: np.ndarray
    decomp_k: np.ndarray
    decomp_pe: np.ndarray
    decomp_m: np.ndarray
    unlinks: int = 0
    _pp_mask: np.ndarray = field(default=None, repr=False, compare=False)

    @property
    def decomps(self):
        """Decompositions as a list of ``(k, pe, m)`` tuples (convenience view)."""
        return list(zip(self.decomp_k.tolist(), self.decomp_pe.tolist(), self.decomp_m.tolist()))

    @property
    def prime_powers(self) -> dict[int, list[int]]:
        out = {}
        n = self.n
        for p in self.primes.tolist():
            pows, pe = [], p
            while pe < n:
                pows.append(pe)
                pe *= p
            out[p] = pows
        return out

    def is_prime_power(self, k: int) -> bool:
        return bool(self._pp_mask[k])

    def __len__(self):
        return self.n


def rough_coprime_sieve(n: int) -> CoprimeTable:
    """Primes ``p < n`` and the rough-coprime decomposition of every composite
    non-prime-power ``k < n``, in ``O(n)`` list operations."""
    n = int(n)
    if n < 2:
        raise InvalidArgument(f"sieve length must be >= 2, got {n}")
    if n > MAX_SIEVE:
        raise CapacityError(f"sieve length {n} exceeds the supported maximum {MAX_SIEVE}")
    try:
        primes, ks, pes, ms, pp, unlinks = _rough_sieve(n)
    except MemoryError as exc:  # pragma: no cover - depends on the host
        raise CapacityError(f"not enough memory for a sieve of length {n}") from exc
    return CoprimeTable(n, primes, ks, pes, ms, int(unlinks), pp)


def smooth_sieve_expand_order(n: int):
    """Yield ``(k, pe, m)`` for every composite non-prime-power ``k < n``, with
    ``pe`` the power of the largest prime factor of ``k``.

    This is the classical schedule: primes in increasing order, then
    exponents, then cofactors prime to ``p``.  It costs ``O(n log n)`` index
    operations and only serves as the reference path and as a test oracle.
    """
    n = int(n)
    if n < 2:
        raise InvalidArgument(f"sieve length must be >= 2, got {n}")
    lpf = np.zeros(n, dtype=np.int64)
    for p in range(2, n):
        if lpf[p] == 0:
            lpf[p::p] = p
    lpf = lpf.tolist()
    for p in range(2, n):
        if lpf[p] != p:
            continue
        pe = p
        while pe * 2 < n:
            for m in range(2, (n - 1) // pe + 1):
                if m % p and lpf[m] < p:
                    yield pe * m, pe, m
            pe *= p


def primes_below(n: int) -> np.ndarray:
    """Plain Eratosthenes sieve; independent from the linked-list sieve."""
    if n < 3:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(n, dtype=bool)
    mark[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if mark[p]:
            mark[p * p::p] = False
    return np.nonzero(mark)[0].astype(np.int64)
