"""Dirichlet characters in Conrey labelling, embeddings of their values,
generalised Bernoulli numbers and Eisenstein constant terms.

A character of order ``o`` is stored as a table of exponents: for each
residue ``r`` mod ``N`` either ``-1`` (``gcd(r, N) > 1``) or ``t`` with
``chi(r) = zeta_o^t`` where ``zeta_o = exp(2 pi i / o)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, lcm

import numpy as np
from sympy import cyclotomic_poly, factorint, primitive_root
from sympy.abc import x as _x

from .errors import IncompatiblePrimeError, InvalidArgument
from .rings import QQ, CountingRing, PrimeField, QuotientRing, Ring, underlying


@lru_cache(maxsize=None)
def conrey_generator(p: int) -> int:
    """Least integer that is a primitive root modulo every power of the odd prime ``p``."""
    g = primitive_root(p)
    while True:
        if gcd(g, p) == 1 and pow(g, p - 1, p * p) != 1 and _is_primitive_mod_p(g, p):
            return g
        g += 1


def _is_primitive_mod_p(g, p):
    return all(pow(g, (p - 1) // r, p) != 1 for r in factorint(p - 1))


@lru_cache(maxsize=None)
def _dlog_table(p: int, e: int) -> np.ndarray:
    """Discrete logs to the Conrey generator on ``(Z/p^e)^*``; -1 off the units."""
    M = p ** e
    g = conrey_generator(p)
    table = np.full(M, -1, dtype=np.int64)
    v = 1
    for j in range(M - M // p):
        table[v] = j
        v = v * g % M
    return table


def _component(p: int, e: int, a: int):
    """Exponent array over residues mod ``p^e`` and its denominator."""
    M = p ** e
    r = np.arange(M, dtype=np.int64)
    if p != 2:
        phi = M - M // p
        logs = _dlog_table(p, e)
        la = int(logs[a % M])
        out = np.where(logs >= 0, (logs * la) % phi, -1)
        return out, phi
    if e == 1:
        return np.where(r % 2 == 1, 0, -1), 1
    if e == 2:
        sa = 1 if a % 4 == 3 else 0
        return np.where(r % 2 == 1, np.where(r % 4 == 3, sa, 0), -1), 2
    # (Z/2^e)^* = <-1> x <5>: r = (-1)^alpha 5^s
    half = 1 << (e - 2)
    alpha = np.where(r % 4 == 3, 1, 0)
    rr = np.where(alpha == 1, (-r) % M, r)
    logs5 = np.full(M, -1, dtype=np.int64)
    v = 1
    for j in range(half):
        logs5[v] = j
        v = v * 5 % M
    s = np.where(r % 2 == 1, logs5[rr], -1)
    aa = a % M
    alpha_a = 1 if aa % 4 == 3 else 0
    s_a = int(logs5[(-aa) % M if alpha_a else aa])
    den = 2 * half
    val = (alpha * alpha_a * half + 2 * s * s_a) % den
    return np.where(r % 2 == 1, val, -1), den


@dataclass(frozen=True)
class DirichletCharacter:
    """Character ``chi_N(a, .)``; see :func:`conrey_character`."""

    modulus: int
    conrey_index: int
    order: int
    log_table: np.ndarray

    def exponent(self, r: int) -> int:
        """``t`` with ``chi(r) = zeta_order^t``, or -1 when ``gcd(r, N) > 1``."""
        return int(self.log_table[r % self.modulus])

    def __call__(self, r: int) -> complex:
        t = self.exponent(r)
        if t < 0:
            return 0
        return complex(np.exp(2j * np.pi * t / self.order))

    @property
    def parity(self) -> int:
        if self.modulus <= 2:
            return 1
        t = self.exponent(self.modulus - 1)
        return 1 if t == 0 else -1

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def conjugate(self) -> "DirichletCharacter":
        return conrey_character(self.modulus, pow(self.conrey_index, -1, self.modulus) if self.modulus > 1 else 1)

    def conductor(self) -> int:
        """Smallest ``f | N`` such that the character factors through ``(Z/f)^*``."""
        N = self.modulus
        for f in sorted(d for d in range(1, N + 1) if N % d == 0):
            units = [r for r in range(N) if gcd(r, N) == 1]
            if all(self.log_table[r] == 0 for r in units if r % f == 1 % f):
                return f
        return N

    def __repr__(self):
        return f"DirichletCharacter(chi_{self.modulus}({self.conrey_index}, .), order={self.order})"

    def __hash__(self):
        return hash((self.modulus, self.conrey_index))

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and other.modulus == self.modulus
            and other.conrey_index % max(self.modulus, 1) == self.conrey_index % max(self.modulus, 1)
        )


@lru_cache(maxsize=None)
def conrey_character(N: int, a: int) -> DirichletCharacter:
    """The character ``chi_N(a, .)`` of the Conrey labelling.

    For odd ``p`` the component at ``p^e`` is ``r -> e(log a log r / phi(p^e))``
    with logs to the least primitive root mod ``p^2``; at ``2^e`` with
    ``e >= 3`` residues are written ``(-1)^alpha 5^s``.
    """
    N, a = int(N), int(a)
    if N < 1:
        raise InvalidArgument(f"modulus must be positive, got {N}")
    if N == 1:
        return DirichletCharacter(1, 1, 1, np.zeros(1, dtype=np.int64))
    if gcd(a, N) != 1:
        raise InvalidArgument(f"Conrey index {a} is not a unit modulo {N}")
    comps = [_component(p, e, a) for p, e in sorted(factorint(N).items())]
    L = 1
    for _, den in comps:
        L = lcm(L, den)
    r = np.arange(N, dtype=np.int64)
    total = np.zeros(N, dtype=np.int64)
    unit = np.ones(N, dtype=bool)
    for (p, e), (vals, den) in zip(sorted(factorint(N).items()), comps):
        v = vals[r % (p ** e)]
        unit &= v >= 0
        total = (total + np.where(v >= 0, v, 0) * (L // den)) % L
    g = L
    for t in np.unique(total[unit]).tolist():
        g = gcd(g, t)
    order = L // g
    table = np.where(unit, total // g, -1).astype(np.int64)
    return DirichletCharacter(N, a % N, order, table)


def trivial_character(N: int = 1) -> DirichletCharacter:
    return conrey_character(N, 1)


# ---------------------------------------------------------------- embeddings

@dataclass(frozen=True)
class RingEmbedding:
    """A ring holding a fixed root of unity ``zeta`` of order ``order``."""

    ring: Ring
    order: int
    zeta: object

    @classmethod
    def prime_field(cls, q: int, order: int = 1) -> "RingEmbedding":
        if (q - 1) % order:
            raise IncompatiblePrimeError(f"order {order} does not divide q-1 for q={q}")
        F = PrimeField(q)
        g = primitive_root(q)
        return cls(F, order, pow(g, (q - 1) // order, q))

    @classmethod
    def cyclotomic(cls, order: int) -> "RingEmbedding":
        """``Q(zeta_order)`` as ``Q[z]/(Phi_order(z))``; for order <= 2 plain rationals."""
        if order <= 2:
            return cls(QQ, order, Fraction(-1) if order == 2 else Fraction(1))
        coeffs = [int(c) for c in reversed(cyclotomic_poly(order, _x, polys=True).all_coeffs())]
        R = QuotientRing(coeffs, QQ, "z")
        return cls(R, order, R.gen())

    def zeta_power(self, o: int, ring: Ring | None = None):
        """A root of unity of order ``o`` (``o`` must divide ``order``)."""
        if self.order % o:
            raise IncompatiblePrimeError(f"character order {o} does not divide embedding order {self.order}")
        R = ring if ring is not None else self.ring
        return R.pow(self.zeta, self.order // o)

    def power_table(self, o: int, ring: Ring | None = None) -> list:
        """``[1, z, z^2, ..., z^(o-1)]`` for ``z`` of order ``o``; ``o - 1`` products at most."""
        R = ring if ring is not None else self.ring
        if o == 1:
            return [R.one]
        base = underlying(R)
        if isinstance(base, PrimeField) and not isinstance(R, CountingRing):
            z = pow(self.zeta, self.order // o, base.q)
        else:
            z = self.zeta_power(o, underlying(R))
        if o == 2:
            return [R.one, R.neg(R.one)]
        tab = [R.one, z]
        for _ in range(o - 2):
            tab.append(R.mul(tab[-1], z))
        return tab

    def element(self, chi: DirichletCharacter, t: int):
        """``zeta_o^t`` in the target ring for ``o = chi.order``."""
        return self.power_table(chi.order)[t % chi.order]


def embed_values(chi: DirichletCharacter, embedding: RingEmbedding, ring: Ring | None = None) -> list:
    """``[chi(0), ..., chi(N-1)]`` in the target ring."""
    R = ring if ring is not None else embedding.ring
    if embedding.order % chi.order:
        raise IncompatiblePrimeError(
            f"embedding of order {embedding.order} cannot hold values of order {chi.order}"
        )
    tab = embedding.power_table(chi.order, R)
    zero = R.zero
    return [zero if t < 0 else tab[t] for t in chi.log_table.tolist()]


def embed_values_array(chi: DirichletCharacter, embedding: RingEmbedding) -> np.ndarray:
    """int64 value table for prime-field embeddings."""
    F = underlying(embedding.ring)
    if not isinstance(F, PrimeField):
        raise InvalidArgument("array values need a prime-field embedding")
    return np.array(embed_values(chi, embedding), dtype=np.int64)


# ---------------------------------------------------------------- Bernoulli

def bernoulli_weights(chi: DirichletCharacter, k: int) -> dict[int, Fraction]:
    """Rational weights ``w_t`` with ``B_{k,chi} = sum_t w_t zeta_o^t``.

    From the generating function
    ``sum_k B_{k,chi} t^k/k! = sum_{a=1}^N chi(a) t e^(at) / (e^(Nt) - 1)``:
    with ``D(t) = (e^(Nt) - 1)/t`` the contribution of ``a`` is
    ``k! [t^k] e^(at) / D(t)``.
    """
    if k < 1:
        raise InvalidArgument("k must be >= 1")
    N = chi.modulus
    D = [Fraction(N ** (j + 1), factorial(j + 1)) for j in range(k + 1)]
    inv = [Fraction(1, N)]
    for j in range(1, k + 1):
        s = sum(D[i] * inv[j - i] for i in range(1, j + 1))
        inv.append(-s / D[0])
    weights: dict[int, Fraction] = {}
    kf = factorial(k)
    for a in range(1, N + 1):
        t = chi.exponent(a)
        if t < 0:
            continue
        c = sum(Fraction(a ** j, factorial(j)) * inv[k - j] for j in range(k + 1))
        weights[t] = weights.get(t, Fraction(0)) + kf * c
    return {t: w for t, w in weights.items() if w}


def gen_bernoulli(chi: DirichletCharacter, k: int, embedding: RingEmbedding | None = None):
    """``B_{k,chi}``: a Fraction for real characters, otherwise an element of
    ``embedding.ring`` (default: the cyclotomic field of the character order)."""
    w = bernoulli_weights(chi, k)
    if embedding is None:
        if chi.order <= 2:
            return sum((wt if t == 0 else -wt for t, wt in w.items()), Fraction(0))
        embedding = RingEmbedding.cyclotomic(chi.order)
    R = embedding.ring
    tab = embedding.power_table(chi.order)
    out = R.zero
    for t, wt in w.items():
        out = R.add(out, _scale(R, tab[t], wt))
    return out


def _scale(R: Ring, elem, c: Fraction):
    base = underlying(R)
    if isinstance(base, QuotientRing):
        return base.scale(elem, base.base(c))
    return base.mul(elem, base(c))


def eis_constant_term(k: int, phi: DirichletCharacter, psi: DirichletCharacter,
                      embedding: RingEmbedding | None = None):
    """Constant coefficient of ``E_k^{phi,psi}``.

    ``-B_{k,psi}/(2k)`` when ``phi`` has modulus 1; ``-B_{1,phi}/2`` when
    ``k = 1`` and ``psi`` has modulus 1; zero otherwise.  The sign and the
    choice of ``phi`` in the second case are the ones under which the
    bundled cusp-form decompositions have vanishing constant term.
    """
    if embedding is None:
        order = lcm(phi.order, psi.order)
        embedding = RingEmbedding.cyclotomic(order)
    R = embedding.ring
    if phi.modulus == 1:
        B = gen_bernoulli(psi, k, embedding)
        return _scale(R, B, Fraction(-1, 2 * k))
    if psi.modulus == 1 and k == 1:
        B = gen_bernoulli(phi, 1, embedding)
        return _scale(R, B, Fraction(-1, 2))
    return R.zero
