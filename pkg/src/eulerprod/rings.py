"""Coefficient rings used by the generic (instrumentable) code paths.

Every algorithm that is not a vectorised hot loop manipulates ring elements
only through a ring handle: ``ring.add(a, b)``, ``ring.mul(a, b)``,
``ring.div_int(a, k)`` and friends.  This keeps the algorithms independent of
the representation (Python ints, ``Fraction``, residues mod q, tuples for
quotient rings) and lets :class:`CountingRing` measure the exact number of
ring operations an algorithm performs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DivisibilityError, InvalidArgument


class Ring:
    """Interface of a commutative coefficient ring."""

    zero = 0
    one = 1

    def __call__(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def neg(self, a):
        return self(-a)

    def mul(self, a, b):
        return self(a * b)

    def mul_int(self, a, k: int):
        return self(a * k)

    def div_int(self, a, k: int):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def __repr__(self):
        return type(self).__name__


class IntegerRing(Ring):
    """Arbitrary precision integers; division only when exact."""

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise DivisibilityError(x.denominator, self)
            return x.numerator
        return int(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a * k

    def div_int(self, a, k):
        q, r = divmod(a, k)
        if r:
            raise DivisibilityError(k, self)
        return q

    def __repr__(self):
        return "ZZ"


class RationalField(Ring):
    """Exact rationals backed by :class:`fractions.Fraction`."""

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def mul_int(self, a, k):
        return a * k

    def div_int(self, a, k):
        if k == 0:
            raise DivisibilityError(k, self)
        return a / k

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def __repr__(self):
        return "QQ"


class PrimeField(Ring):
    """The prime field F_q with elements stored as ints in ``[0, q)``."""

    def __init__(self, q: int):
        if q < 2:
            raise InvalidArgument(f"modulus must be a prime >= 2, got {q}")
        self.q = int(q)

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Rational) and not isinstance(x, int):
            num, den = x.numerator, x.denominator
            if den % self.q == 0:
                raise DivisibilityError(den, self)
            return num * pow(den, -1, self.q) % self.q
        return int(x) % self.q

    def add(self, a, b):
        s = a + b
        return s - self.q if s >= self.q else s

    def sub(self, a, b):
        s = a - b
        return s + self.q if s < 0 else s

    def neg(self, a):
        return (self.q - a) if a else 0

    def mul(self, a, b):
        return a * b % self.q

    def mul_int(self, a, k):
        return a * k % self.q

    def div_int(self, a, k):
        if k % self.q == 0:
            raise DivisibilityError(k, self)
        return a * pow(k, -1, self.q) % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.q)

    def pow(self, a, e):
        return pow(a, e, self.q)

    def balanced(self, a) -> int:
        """Representative of ``a`` in ``(-q/2, q/2]``."""
        return a - self.q if a > self.q // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("Fq", self.q))

    def __repr__(self):
        return f"GF({self.q})"


class QuotientRing(Ring):
    """``base[y] / (minpoly(y))`` for a monic ``minpoly``.

    Elements are tuples ``(c0, ..., c_{d-1})`` of base-ring elements giving
    the coordinates on the power basis ``1, y, ..., y^{d-1}``.  With ``base``
    the integers this is the order Z[y]; with a prime field it is the
    reduction of that order modulo q; with the rationals and a cyclotomic
    polynomial it is a cyclotomic field.
    """

    def __init__(self, minpoly, base: Ring, name: str = "y"):
        minpoly = [base(c) for c in minpoly]
        if len(minpoly) < 2 or not base.eq(minpoly[-1], base.one):
            raise InvalidArgument("minimal polynomial must be monic of degree >= 1")
        self.base = base
        self.minpoly = tuple(minpoly)
        self.degree = len(minpoly) - 1
        self.name = name
        self.zero = tuple([base.zero] * self.degree)
        self.one = tuple([base.one] + [base.zero] * (self.degree - 1))

    def gen(self):
        if self.degree == 1:
            return (self.base.neg(self.minpoly[0]),)
        return tuple([self.base.zero, self.base.one] + [self.base.zero] * (self.degree - 2))

    def __call__(self, x):
        if isinstance(x, tuple):
            if len(x) != self.degree:
                raise InvalidArgument(f"expected {self.degree} coordinates, got {len(x)}")
            return tuple(self.base(c) for c in x)
        return tuple([self.base(x)] + [self.base.zero] * (self.degree - 1))

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def mul_int(self, a, k):
        B = self.base
        return tuple(B.mul_int(x, k) for x in a)

    def scale(self, a, c):
        """Multiply by a base-ring element."""
        B = self.base
        return tuple(B.mul(x, c) for x in a)

    def mul(self, a, b):
        B, d = self.base, self.degree
        prod = [B.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        m = self.minpoly
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top]
            if B.is_zero(c):
                continue
            for i in range(d):
                prod[top - d + i] = B.sub(prod[top - d + i], B.mul(c, m[i]))
        return tuple(prod[:d])

    def div_int(self, a, k):
        B = self.base
        return tuple(B.div_int(x, k) for x in a)

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def inv(self, a):
        """Inverse by solving ``a * x = 1`` on the power basis (base must be a field)."""
        d, B = self.degree, self.base
        basis = [tuple(B.one if i == j else B.zero for i in range(d)) for j in range(d)]
        cols = [self.mul(a, e) for e in basis]
        # augmented matrix rows: coordinate i, unknowns x_j
        mat = [[cols[j][i] for j in range(d)] + [self.one[i]] for i in range(d)]
        for c in range(d):
            piv = next((r for r in range(c, d) if not B.is_zero(mat[r][c])), None)
            if piv is None:
                raise ZeroDivisionError("element is not invertible")
            mat[c], mat[piv] = mat[piv], mat[c]
            ic = B.inv(mat[c][c])
            mat[c] = [B.mul(v, ic) for v in mat[c]]
            for r in range(d):
                if r != c and not B.is_zero(mat[r][c]):
                    f = mat[r][c]
                    mat[r] = [B.sub(v, B.mul(f, w)) for v, w in zip(mat[r], mat[c])]
        return tuple(mat[i][d] for i in range(d))

    def conjugate(self, a):
        """Galois conjugate for a quadratic order: ``y -> -c1 - y``."""
        if self.degree != 2:
            raise InvalidArgument("conjugation is only defined for quadratic rings")
        B = self.base
        c1 = self.minpoly[1]
        u, v = a
        # u + v*(-c1 - y) = (u - c1 v) - v y
        return (B.sub(u, B.mul(c1, v)), B.neg(v))

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.minpoly == self.minpoly
            and repr(other.base) == repr(self.base)
        )

    def __hash__(self):
        return hash((self.minpoly, repr(self.base)))

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({_poly_str(self.minpoly, self.name)})"


def _poly_str(coeffs, var):
    terms = []
    for i, c in enumerate(coeffs):
        if c:
            terms.append(f"{c}*{var}^{i}" if i else f"{c}")
    return " + ".join(reversed(terms)) or "0"


@dataclass
class OpCounter:
    """Tally of ring operations; additions include subtractions and negations."""

    adds: int = 0
    muls: int = 0
    divs: int = 0

    def reset(self):
        self.adds = self.muls = self.divs = 0

    def as_dict(self):
        return {"adds": self.adds, "muls": self.muls, "divs": self.divs}


class CountingRing(Ring):
    """Wrap a ring and count every arithmetic operation performed through it.

    Coercions (``ring(x)``) and zero tests are free: they model loading a
    constant or comparing a machine word, not arithmetic in the ring.
    """

    def __init__(self, base: Ring, counter: OpCounter | None = None):
        self.base = base
        self.counter = counter if counter is not None else OpCounter()
        self.zero = base.zero
        self.one = base.one

    def __call__(self, x):
        return self.base(x)

    def add(self, a, b):
        self.counter.adds += 1
        return self.base.add(a, b)

    def sub(self, a, b):
        self.counter.adds += 1
        return self.base.sub(a, b)

    def neg(self, a):
        self.counter.adds += 1
        return self.base.neg(a)

    def mul(self, a, b):
        self.counter.muls += 1
        return self.base.mul(a, b)

    def mul_int(self, a, k):
        self.counter.muls += 1
        return self.base.mul_int(a, k)

    def div_int(self, a, k):
        self.counter.divs += 1
        return self.base.div_int(a, k)

    def inv(self, a):
        self.counter.divs += 1
        return self.base.inv(a)

    def is_zero(self, a):
        return self.base.is_zero(a)

    def __getattr__(self, name):
        return getattr(self.base, name)

    def __repr__(self):
        return f"Counting({self.base!r})"


ZZ = IntegerRing()
QQ = RationalField()


def infer_ring(values) -> Ring:
    """Pick ZZ for all-integer input and QQ as soon as a Fraction appears."""
    for v in values:
        if isinstance(v, Fraction):
            return QQ
        if not isinstance(v, int):
            raise InvalidArgument(f"cannot infer a ring for element {v!r}; pass ring=")
    return ZZ


def underlying(ring: Ring) -> Ring:
    """Strip a :class:`CountingRing` wrapper."""
    while isinstance(ring, CountingRing):
        ring = ring.base
    return ring
