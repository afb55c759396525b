"""Dirichlet coefficients of direct sums, tensor products and symmetric
powers of objects given by local factors.

An :class:`ArithmeticObject` supplies ``F_p`` at every prime.  Good primes
are combined through Newton sums (tensor products multiply them, symmetric
powers use strided root powers) and the resulting prime-power coefficients
are propagated by :func:`~eulerprod.euler.expand_precomp`.  At primes where
two or more objects ramify the naive tensor is wrong, so the caller must
supply the local factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .chars import DirichletCharacter
from .errors import InvalidArgument
from .euler import CoeffSeq, EulerFactorProvider, expand_precomp
from .rings import ZZ, QuotientRing, Ring
from .sieve import CoprimeTable, rough_coprime_sieve
from .symfun import FactorRepr, as_newton, direct_sum, factor_from_coeffs, sym_power


@dataclass
class ArithmeticObject:
    """Euler data of a degree-``degree`` object of motivic weight ``weight``.

    ``local(p)`` returns ``[1, c_1, ..., c_d]`` over ``ring``; ``bad`` maps
    primes to replacement factors and ``ramified`` lists the primes where the
    object is not unramified (its local factor has lower degree there).
    """

    degree: int
    weight: int
    local: object
    ring: Ring = ZZ
    bad: dict = field(default_factory=dict)
    ramified: frozenset = frozenset()
    name: str = ""

    def factor(self, p: int) -> FactorRepr:
        coeffs = self.bad[p] if p in self.bad else self.local(p)
        deg = len(coeffs) - 1 if p in self.bad else self.degree
        return factor_from_coeffs([self.ring(c) for c in coeffs], self.ring, deg)

    # -------------------------------------------------------------- builders

    @classmethod
    def zeta(cls) -> "ArithmeticObject":
        return cls(1, 0, lambda p: [1, -1], ZZ, name="zeta")

    @classmethod
    def unit(cls) -> "ArithmeticObject":
        """The degree-0 object with ``L = 1``."""
        return cls(0, 0, lambda p: [1], ZZ, name="one")

    @classmethod
    def character(cls, chi: DirichletCharacter, shift: int = 0) -> "ArithmeticObject":
        """``L(chi, s - shift)``: ``F_p = 1 - chi(p) p^shift T`` (real characters only)."""
        if chi.order > 2:
            raise InvalidArgument("character objects over ZZ need a real character")
        N = chi.modulus

        def local(p):
            t = chi.exponent(p)
            if t < 0:
                return [1]
            return [1, -(1 if t == 0 else -1) * p ** shift]

        ram = frozenset(p for p in range(2, N + 1) if N % p == 0 and all(p % r for r in range(2, p)))
        return cls(1, 2 * shift, local, ZZ, ramified=ram, name=f"chi_{N}({chi.conrey_index})")

    @classmethod
    def modular(cls, aps: dict, k: int, chi: DirichletCharacter, level: int,
                minpoly=None, bad: dict | None = None, name: str = "") -> "ArithmeticObject":
        """Newform with ``F_p = 1 - a_p T + chi(p) p^(k-1) T^2`` at ``p`` not dividing ``level``.

        ``aps`` maps primes to integers (or coordinate tuples over
        ``Z[y]/(minpoly)``).  At ``p | level`` the factor defaults to
        ``1 - a_p T``, which is right for ``p || level`` with trivial
        character; pass ``bad`` for anything else.
        """
        if chi.order > 2:
            raise InvalidArgument("only real nebentypus characters are supported")
        R = ZZ if minpoly is None or len(minpoly) == 2 else QuotientRing(minpoly, ZZ, "y")

        def coerce(v):
            if isinstance(v, (tuple, list)):
                return R(tuple(v)) if R is not ZZ else int(v[0])
            return R(v)

        a = {int(p): coerce(v) for p, v in aps.items()}

        def local(p):
            if p not in a:
                raise InvalidArgument(f"no a_p for p={p}")
            t = chi.exponent(p)
            c = 0 if t < 0 else (1 if t == 0 else -1)
            return [R.one, R.neg(a[p]), R(c * p ** (k - 1))]

        ram = frozenset(int(p) for p in _prime_divisors(level))
        badf = {}
        for p in ram:
            if bad and p in bad:
                badf[p] = [coerce(c) for c in bad[p]]
            elif p in a:
                badf[p] = [R.one, R.neg(a[p])]
        if bad:
            for p, c in bad.items():
                badf.setdefault(int(p), [coerce(x) for x in c])
        obj = cls(2, k - 1, local, R, badf, ram, name)
        obj.aps = a
        return obj

    def conjugate(self) -> "ArithmeticObject":
        """Galois conjugate of a modular object over a quadratic order."""
        R = self.ring
        if not isinstance(R, QuotientRing) or R.degree != 2:
            raise InvalidArgument("conjugation needs a quadratic coefficient ring")

        def local(p):
            return [R.conjugate(c) for c in self.local(p)]

        bad = {p: [R.conjugate(c) for c in cs] for p, cs in self.bad.items()}
        obj = ArithmeticObject(self.degree, self.weight, local, R, bad, self.ramified, self.name + "^c")
        if hasattr(self, "aps"):
            obj.aps = {p: R.conjugate(v) for p, v in self.aps.items()}
        return obj


def _prime_divisors(N: int) -> list[int]:
    from sympy import primefactors

    return [int(p) for p in primefactors(N)]


# ---------------------------------------------------------------- rings

def _common_ring(objs) -> Ring:
    rings = {repr(o.ring): o.ring for o in objs}
    quot = [R for R in rings.values() if isinstance(R, QuotientRing)]
    if not quot:
        if len(rings) > 1:
            raise InvalidArgument(f"objects live over different rings: {sorted(rings)}")
        return next(iter(rings.values()))
    if len({repr(R) for R in quot}) > 1:
        raise InvalidArgument("objects use different coefficient orders")
    others = [R for R in rings.values() if not isinstance(R, QuotientRing)]
    if any(R is not ZZ for R in others):
        raise InvalidArgument("cannot mix a number-field order with a non-integer ring")
    return quot[0]


def _lift(v, R: Ring):
    if isinstance(R, QuotientRing) and not isinstance(v, tuple):
        return R(v)
    return v


def _rationalize(vals, R: Ring):
    """Project values of an order to its base ring when they are all rational."""
    if isinstance(R, QuotientRing) and all(all(R.base.is_zero(c) for c in v[1:]) for v in vals):
        return tuple(v[0] for v in vals), R.base
    return tuple(vals), R


class _FactorProvider(EulerFactorProvider):
    """Provider backed by a function ``fn(p, e_max) -> FactorRepr``."""

    def __init__(self, fn, ring: Ring, degree: int):
        super().__init__(ring)
        self.fn = fn
        self.degree = degree

    def factor(self, p, e_max):
        return self.fn(p, e_max)


def _project_factor(F: FactorRepr, target: Ring) -> FactorRepr:
    vals, R = _rationalize(F.values, F.ring)
    if R is not target:
        raise InvalidArgument(f"local data over {F.ring!r} is not rational; use ring={F.ring!r}")
    return FactorRepr(F.kind, F.degree, vals, R)


def _expand(fn, out_ring: Ring, degree: int, n: int, table):
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if table is None or table.n < n + 1:
        table = rough_coprime_sieve(max(n + 1, 2))

    def wrapped(p, e_max):
        F = fn(p, e_max)
        if out_ring is not F.ring:
            F = _project_factor(F, out_ring)
        return F

    return expand_precomp(_FactorProvider(wrapped, out_ring, degree), table, n)


def _output_ring(R: Ring, ring):
    if ring is not None:
        return ring
    return R.base if isinstance(R, QuotientRing) else R


def _override(p, overrides, R):
    c = overrides[p]
    return factor_from_coeffs([_lift(R(x) if not isinstance(x, tuple) else R(x), R) for x in c], R, len(c) - 1)


# ---------------------------------------------------------------- operations

def dirichlet_direct_sum(objs, n: int, table: CoprimeTable | None = None, ring: Ring | None = None) -> CoeffSeq:
    """Coefficients of ``prod_i L(f_i, s)``: local factors are multiplied."""
    objs = list(objs)
    if not objs:
        raise InvalidArgument("need at least one object")
    R = _common_ring(objs)
    out = ring if ring is not None else R
    degree = sum(o.degree for o in objs)

    def fn(p, e_max):
        F = None
        for o in objs:
            G = _lift_factor(o.factor(p), R)
            F = G if F is None else direct_sum(F, G, max(e_max, 1))
        return F

    return _expand(fn, out, degree, n, table)


def _lift_factor(F: FactorRepr, R: Ring) -> FactorRepr:
    if F.ring is R:
        return F
    return FactorRepr(F.kind, F.degree, tuple(_lift(v, R) for v in F.values), R)


def dirichlet_tensor(objs, n: int, table: CoprimeTable | None = None, overrides: dict | None = None,
                     ring: Ring | None = None) -> CoeffSeq:
    """Coefficients of ``L(f_1 x ... x f_r, s)``.

    Good primes multiply Newton sums truncated at ``floor(log_p n)``.  A prime
    where two or more objects ramify needs an entry in ``overrides``
    (``{p: [1, c_1, ...]}``); with a single ramified object the tensor of
    its local factor with the unramified ones is used.  The output ring
    defaults to the integers when the inputs live in a quadratic order and
    the tensor data turn out rational.
    """
    objs = list(objs)
    if not objs:
        raise InvalidArgument("need at least one object")
    overrides = {int(p): list(c) for p, c in (overrides or {}).items()}
    R = _common_ring(objs)
    out = _output_ring(R, ring)
    degree = 1
    for o in objs:
        degree *= o.degree
    need = sorted({p for o in objs for p in o.ramified
                   if sum(p in q.ramified for q in objs) >= 2 and p not in overrides and p <= n})
    if need:
        raise InvalidArgument(f"primes {need} ramify in several factors; supply their local factors")

    def fn(p, e_max):
        if p in overrides:
            return _override(p, overrides, R)
        ell = max(e_max, 1)
        vals = None
        for o in objs:
            N = as_newton(_lift_factor(o.factor(p), R), ell).values
            vals = N if vals is None else tuple(R.mul(a, b) for a, b in zip(vals, N))
        return FactorRepr("newton", degree, vals, R)

    return _expand(fn, out, degree, n, table)


def dirichlet_sym_power(obj: ArithmeticObject, k: int, n: int, table: CoprimeTable | None = None,
                        overrides: dict | None = None, ring: Ring | None = None) -> CoeffSeq:
    """Coefficients of ``L(Sym^k f, s)``.

    At ramified primes the symmetric power of the supplied (lower-degree)
    factor is used, which gives ``1 - a_p^k T`` for a multiplicative prime;
    ``overrides`` replaces it where that is not the right answer.
    """
    if k < 0:
        raise InvalidArgument("k must be >= 0")
    overrides = {int(p): list(c) for p, c in (overrides or {}).items()}
    R = obj.ring
    out = ring if ring is not None else R
    degree = comb(obj.degree + k - 1, k) if obj.degree else int(k == 0)

    def fn(p, e_max):
        if p in overrides:
            return _override(p, overrides, R)
        P = obj.factor(p)
        return sym_power(P, k, max(e_max, 1), kind="newton")

    return _expand(fn, out, degree, n, table)


def triple_product_bad_factor(ap_f, ap_g, ap_h, p: int, form: str = "steinberg") -> list:
    """Local factor of the triple product at a prime dividing the common level.

    With ``alpha = a_p(f) a_p(g) a_p(h)`` the default is
    ``(1 - alpha T)(1 - p alpha T)^2``: the part of the threefold tensor of
    Steinberg representations fixed by monodromy.  ``form="printed"`` gives
    ``(1 - alpha T)(1 - p alpha T^2)``, which does not reproduce the known
    coefficient prefix at level 35 (kept for comparison only).
    """
    alpha = ap_f * ap_g * ap_h
    if form == "steinberg":
        # (1 - aT)(1 - 2paT + p^2 a^2 T^2)
        return [1, -alpha - 2 * p * alpha, 2 * p * alpha ** 2 + p * p * alpha ** 2, -p * p * alpha ** 3]
    if form == "printed":
        return [1, -alpha, -p * alpha, p * alpha ** 2]
    raise InvalidArgument(f"unknown form {form!r}")


def triple_product(f: ArithmeticObject, g: ArithmeticObject, h: ArithmeticObject, level: int, n: int,
                   table: CoprimeTable | None = None, form: str = "steinberg") -> CoeffSeq:
    """Coefficients of ``L(f x g x h, s)`` for three newforms of the same
    squarefree level with local factors adjusted at ``p | level``."""
    overrides = {}
    for p in _prime_divisors(level):
        if p > n:
            continue
        vals = []
        for o in (f, g, h):
            if not hasattr(o, "aps") or p not in o.aps:
                raise InvalidArgument(f"a_{p} missing for {o.name or 'object'}")
            vals.append(o.aps[p])
        R = _common_ring([f, g, h])
        prod = _lift(vals[0], R)
        for v in vals[1:]:
            prod = R.mul(prod, _lift(v, R))
        (alpha,), base = _rationalize([prod], R)
        if isinstance(base, QuotientRing):
            raise InvalidArgument(f"a_{p}(f)a_{p}(g)a_{p}(h) is not rational")
        overrides[p] = triple_product_bad_factor(int(alpha), 1, 1, p, form)
    return dirichlet_tensor([f, g, h], n, table, overrides=overrides)


def objects_from_bg(dec, n: int, prime=None):
    """Modular object (and its conjugate when the Hecke field is quadratic)
    from the prime coefficients of a decomposition."""
    from .bgform import load_decomposition, mf_coefficients

    dec = load_decomposition(dec)
    res = mf_coefficients(dec, n, prime=prime)
    aps = res.as_dict()
    obj = ArithmeticObject.modular(aps, dec.weight, dec.nebentypus_character(), dec.level,
                                   minpoly=dec.minpoly, name=dec.name)
    return obj


__all__ = [
    "ArithmeticObject",
    "dirichlet_direct_sum",
    "dirichlet_tensor",
    "dirichlet_sym_power",
    "triple_product_bad_factor",
    "triple_product",
    "objects_from_bg",
]
