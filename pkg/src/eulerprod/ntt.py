"""Number-theoretic transforms over word-sized FFT primes.

An FFT prime ``q = m 2^r L + 1`` has ``2^r``-th roots of unity (for
transforms of length up to ``2^r``) and roots of unity of every order
dividing ``L`` (for character values).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from math import lcm

import numpy as np
from numba import njit
from sympy import isprime, primitive_root

from . import _kernels as K
from .errors import CapacityError, IncompatiblePrimeError, InvalidArgument

MAX_SERIES_LENGTH = 1 << 32


@dataclass(frozen=True)
class FftPrime:
    """A prime ``q`` with ``2^r || q - 1`` and ``o | q - 1`` for each of ``extra_orders``."""

    q: int
    r: int
    extra_orders: tuple
    primitive_root: int

    def max_length(self) -> int:
        """Longest series whose truncated product fits one transform."""
        return 1 << (self.r - 1)

    def embedding(self, order: int = 1):
        from .chars import RingEmbedding

        if (self.q - 1) % order:
            raise IncompatiblePrimeError(f"order {order} does not divide q-1 for q={self.q}")
        from .rings import PrimeField

        return RingEmbedding(PrimeField(self.q), order, pow(self.primitive_root, (self.q - 1) // order, self.q))


def _valuation2(x: int) -> int:
    return (x & -x).bit_length() - 1


def fft_prime_from_int(q: int, extra_orders=(1,)) -> FftPrime:
    """Wrap a user-supplied prime, checking it is usable."""
    q = int(q)
    if q < 3 or not isprime(q):
        raise InvalidArgument(f"{q} is not an odd prime")
    if q >= K.MAX_MODULUS:
        raise CapacityError(f"modulus {q} exceeds 2^56, the limit of the word arithmetic")
    orders = tuple(sorted(set(int(o) for o in extra_orders)))
    for o in orders:
        if (q - 1) % o:
            raise IncompatiblePrimeError(f"character order {o} does not divide q-1 for q={q}")
    return FftPrime(q, _valuation2(q - 1), orders, int(primitive_root(q)))


def find_fft_prime(n: int, required_orders=(1,), min_bits: int = 53, skip: int = 0) -> FftPrime:
    """Smallest prime ``q >= 2^min_bits`` of the form ``m 2^r L + 1`` with
    ``2^(r-1) >= n`` and ``L = lcm(required_orders)``.

    ``skip`` discards that many candidates first, which gives a sequence of
    distinct primes for cross-checks.
    """
    n = int(n)
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if n > MAX_SERIES_LENGTH:
        raise CapacityError(f"series length {n} exceeds the supported maximum 2^32")
    r = max(1, (n - 1).bit_length() + 1)
    L = 1
    for o in required_orders:
        L = lcm(L, int(o))
    step = (1 << r) * L
    m = max(1, -(-((1 << min_bits) - 1) // step))
    while True:
        q = m * step + 1
        if q >= K.MAX_MODULUS:
            raise CapacityError(
                f"no FFT prime below 2^56 for length {n}, orders {tuple(required_orders)}, {min_bits} bits"
            )
        if isprime(q):
            if skip == 0:
                return FftPrime(q, _valuation2(q - 1), tuple(sorted(set(required_orders))), int(primitive_root(q)))
            skip -= 1
        m += 1


# ---------------------------------------------------------------- transforms

@njit(cache=True, nogil=True)
def _bit_reverse(a):
    n = a.shape[0]
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            t = a[i]
            a[i] = a[j]
            a[j] = t


@njit(cache=True, nogil=True)
def _ntt_inplace(a, w, q):
    """Forward transform with twiddles ``w[j] = omega^j`` for ``j < len(a)/2``."""
    n = a.shape[0]
    qi = 1.0 / float(q)
    _bit_reverse(a)
    ws = np.empty(max(n // 2, 1), dtype=np.int64)
    length = 2
    while length <= n:
        half = length >> 1
        step = n // length
        for j in range(half):
            ws[j] = w[j * step]
        for i in range(0, n, length):
            for j in range(half):
                u = a[i + j]
                v = K.mulmod_qi(a[i + j + half], ws[j], q, qi)
                s = u + v
                if s >= q:
                    s -= q
                d = u - v
                if d < 0:
                    d += q
                a[i + j] = s
                a[i + j + half] = d
        length <<= 1


@njit(cache=True, nogil=True)
def _powers(root, count, q):
    w = np.empty(count, dtype=np.int64)
    x = np.int64(1)
    for i in range(count):
        w[i] = x
        x = K.mulmod(x, root, q)
    return w


@njit(cache=True, nogil=True)
def _scale(a, c, q):
    for i in range(a.shape[0]):
        a[i] = K.mulmod(a[i], c, q)


@njit(cache=True, nogil=True)
def _pointwise(a, b, q):
    qi = 1.0 / float(q)
    for i in range(a.shape[0]):
        a[i] = K.mulmod_qi(a[i], b[i], q, qi)


class _TwiddleCache:
    def __init__(self):
        self._lock = threading.Lock()
        self._tables = {}

    def get(self, prime: FftPrime, size: int):
        key = (prime.q, size)
        tab = self._tables.get(key)
        if tab is None:
            q = prime.q
            root = pow(prime.primitive_root, (q - 1) // size, q)
            fwd = _powers(root, max(size // 2, 1), q)
            inv = _powers(pow(root, -1, q), max(size // 2, 1), q)
            tab = (fwd, inv, pow(size, -1, q))
            with self._lock:
                self._tables[key] = tab
        return tab


_TWIDDLES = _TwiddleCache()


def _size_for(prime: FftPrime, size: int):
    if size > (1 << prime.r):
        raise CapacityError(f"transform of size {size} needs 2^{size.bit_length() - 1} | q-1; q={prime.q}")


def ntt(a, prime: FftPrime, inverse: bool = False) -> np.ndarray:
    """Transform of a power-of-two length vector (a copy is returned)."""
    a = np.array(a, dtype=np.int64) % prime.q
    size = a.shape[0]
    if size & (size - 1):
        raise InvalidArgument("transform length must be a power of two")
    _size_for(prime, size)
    fwd, inv, ninv = _TWIDDLES.get(prime, size)
    if inverse:
        _ntt_inplace(a, inv, prime.q)
        _scale(a, ninv, prime.q)
    else:
        _ntt_inplace(a, fwd, prime.q)
    return a


def series_mul(a, b, n: int, prime: FftPrime) -> np.ndarray:
    """First ``n`` coefficients (index 0 included) of the product of two
    power series given by their coefficient arrays mod ``prime.q``."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if n > MAX_SERIES_LENGTH:
        raise CapacityError("series longer than 2^32 coefficients are not supported")
    q = prime.q
    same = a is b
    a = np.asarray(a, dtype=np.int64)[:n]
    b = np.asarray(b, dtype=np.int64)[:n]
    need = a.shape[0] + b.shape[0] - 1
    size = 1
    while size < need:
        size <<= 1
    _size_for(prime, size)
    fwd, inv, ninv = _TWIDDLES.get(prime, size)
    fa = np.zeros(size, dtype=np.int64)
    fa[: a.shape[0]] = a % q
    _ntt_inplace(fa, fwd, q)
    if same:
        fb = fa
    else:
        fb = np.zeros(size, dtype=np.int64)
        fb[: b.shape[0]] = b % q
        _ntt_inplace(fb, fwd, q)
    _pointwise(fa, fb, q)
    _ntt_inplace(fa, inv, q)
    out = np.zeros(n, dtype=np.int64)
    m = min(n, size)
    out[:m] = fa[:m]
    _scale(out, ninv, q)
    return out


def series_mul_schoolbook(a, b, n: int, q: int) -> np.ndarray:
    """Quadratic reference product mod ``q`` (test oracle)."""
    a = [int(x) for x in a[:n]]
    b = [int(x) for x in b[:n]]
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return np.array([v % q for v in out], dtype=np.int64)
