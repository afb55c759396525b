"""Expansion of Euler products into Dirichlet coefficients.

Given local factors ``F_p`` for every prime ``p < n``, compute ``a_1..a_n``
of ``prod_p F_p(p^-s)^-1``.  Prime-power coefficients are the complete sums
``h_e(F_p)``; every other coefficient is one product ``a_k = a_{p^e} a_m``
read off a :class:`~eulerprod.sieve.CoprimeTable`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .errors import InvalidArgument, ProviderError
from .rings import ZZ, CountingRing, IntegerRing, PrimeField, Ring, underlying
from .sieve import CoprimeTable, rough_coprime_sieve, smooth_sieve_expand_order
from .symfun import FactorRepr, complete_sequence, factor_from_coeffs, poly_from_newton


@dataclass
class CoeffSeq:
    """Coefficients ``a_0..a_n`` over ``ring``; ``values[i]`` is ``a_i``.

    ``values`` is an int64 array for word-sized rings and a list otherwise.
    Slot 0 holds a constant term (zero for Dirichlet series).
    """

    ring: Ring
    values: object
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __len__(self):
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def tolist(self) -> list:
        v = self.values
        return v.tolist() if isinstance(v, np.ndarray) else list(v)

    def to_ints(self, balanced: bool = True) -> list:
        """Plain Python integers; residues mod q are lifted to ``(-q/2, q/2]``."""
        R = underlying(self.ring)
        vals = self.tolist()
        if isinstance(R, PrimeField) and balanced:
            return [R.balanced(int(v)) for v in vals]
        return [int(v) for v in vals]


# ---------------------------------------------------------------- providers

class EulerFactorProvider:
    """Per-prime source of local factors.

    Subclasses implement :meth:`factor`, returning a poly-kind
    :class:`FactorRepr` or, for Newton-kind providers, at least ``e_max``
    power sums.
    """

    kind = "poly"
    degree: int | None = None

    def __init__(self, ring: Ring):
        self.ring = ring

    def factor(self, p: int, e_max: int) -> FactorRepr:
        raise NotImplementedError

    def local(self, p: int, e_max: int) -> FactorRepr:
        try:
            return self.factor(p, e_max)
        except ProviderError:
            raise
        except Exception as exc:
            raise ProviderError(p, exc) from exc


class PolyProvider(EulerFactorProvider):
    """``fn(p)`` returns the coefficient list ``[1, c_1, ..., c_d]`` of ``F_p``."""

    def __init__(self, fn, ring: Ring = ZZ, degree: int | None = None):
        super().__init__(ring)
        self.fn = fn
        self.degree = degree

    def factor(self, p, e_max):
        return factor_from_coeffs(self.fn(p), self.ring, self.degree)


class ConstantProvider(PolyProvider):
    """The same factor at every prime (``[1, -1]`` gives the zeta function)."""

    def __init__(self, coeffs, ring: Ring = ZZ):
        coeffs = list(coeffs)
        super().__init__(lambda p: coeffs, ring, len(coeffs) - 1)
        self.coeffs = coeffs


class MappingProvider(PolyProvider):
    """Factors from a dict ``{p: [1, c_1, ...]}`` with an optional default."""

    def __init__(self, factors: dict, default=None, ring: Ring = ZZ):
        self.factors = {int(p): list(c) for p, c in factors.items()}
        self.default = None if default is None else list(default)

        def fn(p):
            if p in self.factors:
                return self.factors[p]
            if self.default is None:
                raise InvalidArgument(f"no local factor for p={p} and no default")
            return self.default

        super().__init__(fn, ring)


class NewtonProvider(EulerFactorProvider):
    """``fn(p, ell)`` returns power sums ``[N_1, ..., N_ell]`` of a degree-``degree`` factor."""

    kind = "newton"

    def __init__(self, fn, degree: int, ring: Ring = ZZ):
        super().__init__(ring)
        self.fn = fn
        self.degree = degree

    def factor(self, p, e_max):
        vals = tuple(self.ring(v) for v in self.fn(p, e_max))
        return FactorRepr("newton", self.degree, vals, self.ring)


class ArrayProvider(EulerFactorProvider):
    """Factors stored as a matrix ``sigma[t, i-1] = sigma_i`` for ``primes[t]``.

    Allows the compiled seeding loop when the ring is a prime field or the
    integers.  ``overrides`` maps primes to coefficient lists that replace
    the stored row (e.g. bad primes of lower degree).
    """

    def __init__(self, primes, sigma, ring: Ring, overrides: dict | None = None):
        super().__init__(ring)
        self.primes = np.asarray(primes, dtype=np.int64)
        self.sigma = np.asarray(sigma, dtype=np.int64)
        if self.sigma.ndim != 2 or self.sigma.shape[0] != self.primes.shape[0]:
            raise InvalidArgument("sigma must have one row per prime")
        self.degree = self.sigma.shape[1]
        self.index = {int(p): t for t, p in enumerate(self.primes.tolist())}
        self.overrides = {int(p): list(c) for p, c in (overrides or {}).items()}

    def factor(self, p, e_max):
        if p in self.overrides:
            return factor_from_coeffs(self.overrides[p], self.ring, self.degree)
        t = self.index.get(p)
        if t is None:
            raise InvalidArgument(f"no local data for p={p}")
        sig = tuple(self.ring(int(v)) for v in self.sigma[t])
        return FactorRepr("poly", self.degree, sig, self.ring)

    def effective_sigma(self, primes) -> np.ndarray:
        """Rows for ``primes`` with overrides applied, as an int64 matrix."""
        sig = np.zeros((len(primes), self.degree), dtype=np.int64)
        R = underlying(self.ring)
        for t, p in enumerate(np.asarray(primes).tolist()):
            if p in self.overrides:
                c = self.overrides[p][1:]
                for i, v in enumerate(c):
                    v = -v if i % 2 == 0 else v
                    sig[t, i] = R(v) if isinstance(R, PrimeField) else v
            else:
                j = self.index.get(p)
                if j is None:
                    raise ProviderError(p, InvalidArgument("no local data"))
                sig[t] = self.sigma[j]
        return sig


# ---------------------------------------------------------------- expansion

def _e_max(p: int, n: int) -> int:
    e, pe = 0, 1
    while pe * p <= n:
        pe *= p
        e += 1
    return e


def primepower_block(provider: EulerFactorProvider, p: int, e_max: int, ring: Ring | None = None) -> list:
    """``[a_p, a_{p^2}, ..., a_{p^e_max}]`` for the factor at ``p``.

    Poly-kind factors use the division-free recurrence for complete sums;
    Newton-kind factors use ``e h_e = sum_j N_j h_{e-j}``.
    """
    R = ring if ring is not None else provider.ring
    if e_max < 1:
        return []
    F = provider.local(p, e_max)
    if F.kind == "newton":
        F = FactorRepr("newton", F.degree, F.values[:e_max], R)
        return list(poly_from_newton(F, e_max, +1).values)
    return complete_sequence(F.values, e_max, R)


def expand_reference(provider: EulerFactorProvider, n: int, ring: Ring | None = None) -> CoeffSeq:
    """Coefficients ``a_1..a_n`` using the largest-prime-factor schedule."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    R = ring if ring is not None else provider.ring
    a = [R.zero] * (n + 1)
    a[1] = R.one
    if n >= 2:
        table = rough_coprime_sieve(n + 1)
        for p in table.primes.tolist():
            block = primepower_block(provider, p, _e_max(p, n), R)
            pe = p
            for v in block:
                a[pe] = v
                pe *= p
        for k, pe, m in smooth_sieve_expand_order(n + 1):
            a[k] = R.mul(a[pe], a[m])
    return CoeffSeq(R, a, {"path": "reference"})


def expand_precomp(provider: EulerFactorProvider, table: CoprimeTable, n: int | None = None,
                   ring: Ring | None = None) -> CoeffSeq:
    """Coefficients ``a_1..a_n`` with one ring product per composite index.

    ``table`` must come from ``rough_coprime_sieve(N)`` with ``N > n``;
    ``n`` defaults to ``table.n - 1``.  Prime fields below ``2**56`` and the
    integers run through compiled loops unless ``ring`` is a
    :class:`CountingRing`.
    """
    if n is None:
        n = table.n - 1
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if table.n < n + 1:
        raise InvalidArgument(f"table covers indices < {table.n}, need {n + 1}")
    R = ring if ring is not None else provider.ring
    base = underlying(R)
    counting = isinstance(R, CountingRing)
    primes = table.primes[table.primes <= n]
    if table.n == n + 1:
        ks, pes, ms = table.decomp_k, table.decomp_pe, table.decomp_m
    else:
        cut = int(np.searchsorted(table.decomp_k, n, side="right"))
        ks, pes, ms = table.decomp_k[:cut], table.decomp_pe[:cut], table.decomp_m[:cut]

    if not counting and isinstance(base, PrimeField) and base.q < K.MAX_MODULUS:
        a = np.zeros(n + 1, dtype=np.int64)
        a[1] = 1 % base.q
        _seed_words(provider, primes, a, base)
        K.propagate_mod(a, ks, pes, ms, base.q)
        return CoeffSeq(R, a, {"path": "precomp"})

    if not counting and isinstance(base, IntegerRing):
        a = np.zeros(n + 1, dtype=np.int64)
        a[1] = 1
        ok = _seed_words(provider, primes, a, base)
        if ok and K.propagate_int(a, ks, pes, ms) < 0:
            return CoeffSeq(R, a, {"path": "precomp"})
        # coefficients outgrew 64 bits: redo with Python integers

    a = [R.zero] * (n + 1)
    a[1] = R.one
    for p in primes.tolist():
        block = primepower_block(provider, p, _e_max(p, n), R)
        pe = p
        for v in block:
            a[pe] = v
            pe *= p
    mul = R.mul
    for k, pe, m in zip(ks.tolist(), pes.tolist(), ms.tolist()):
        a[k] = mul(a[pe], a[m])
    return CoeffSeq(R, a, {"path": "precomp"})


def _seed_words(provider, primes, a, base) -> bool:
    """Seed prime powers into an int64 array; False if integers overflowed."""
    if isinstance(provider, ArrayProvider):
        sig = provider.effective_sigma(primes)
        if isinstance(base, PrimeField):
            K.seed_prime_powers_mod(a, primes, sig % base.q, base.q)
            return True
        return K.seed_prime_powers_int(a, primes, sig) < 0
    n = a.shape[0] - 1
    for p in primes.tolist():
        block = primepower_block(provider, p, _e_max(p, n), base)
        pe = p
        for v in block:
            v = int(v)
            if isinstance(base, IntegerRing) and abs(v) >= 1 << 62:
                return False
            a[pe] = v
            pe *= p
    return True


def expand(provider: EulerFactorProvider, n: int, ring: Ring | None = None) -> CoeffSeq:
    """Convenience wrapper: build the sieve table and call :func:`expand_precomp`."""
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if n == 1:
        R = ring if ring is not None else provider.ring
        return CoeffSeq(R, [R.zero, R.one])
    return expand_precomp(provider, rough_coprime_sieve(n + 1), n, ring)


def prime_count_inequalities(n: int) -> tuple[int, int, int]:
    """``(pi(n), sum_{e>=2} (e-2) pi(n^(1/e)), sum_{e>=2} (e-1) pi(n^(1/e)))``.

    The two sums bound the extra work spent on prime powers above the cube
    and square respectively; they are compared with ``pi(n)`` in the tests.
    """
    from .sieve import primes_below

    pr = primes_below(n + 1)
    pi_n = len(pr)
    s2 = s1 = 0
    e = 2
    while 2 ** e <= n:
        cnt = sum(1 for p in pr.tolist() if p ** e <= n)
        s2 += (e - 2) * cnt
        s1 += (e - 1) * cnt
        e += 1
    return pi_n, s2, s1


__all__ = [
    "CoeffSeq",
    "EulerFactorProvider",
    "PolyProvider",
    "ConstantProvider",
    "MappingProvider",
    "NewtonProvider",
    "ArrayProvider",
    "primepower_block",
    "expand_reference",
    "expand_precomp",
    "expand",
    "prime_count_inequalities",
]
