"""Symmetric-function calculus on local factors.

A local factor of degree ``d`` is ``P(T) = prod_i (1 - alpha_i T)``.  It can
be described by three equivalent sequences:

* ``poly``:  elementary symmetric functions ``sigma_k`` of the alpha_i, so
  that ``P(T) = sum_k (-1)^k sigma_k T^k`` (``sigma_k = 0`` for ``k > d``);
* ``newton``: power sums ``N_k = sum_i alpha_i^k``;
* ``complete``: complete homogeneous sums ``h_k``, the coefficients of
  ``1/P(T)``.

Tensor products multiply Newton sums, root powers subsample them and
symmetric powers are complete sums of root powers.  All arithmetic goes
through a ring handle from :mod:`eulerprod.rings`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod

from sympy.utilities.iterables import partitions

from .errors import IntegrityError, InvalidArgument
from .rings import Ring, infer_ring

KINDS = ("poly", "newton", "complete")


@dataclass(frozen=True)
class FactorRepr:
    """One local factor in one of the three representations.

    ``values[k-1]`` holds ``sigma_k``, ``N_k`` or ``h_k`` depending on
    ``kind``.  For ``poly`` at most ``degree`` values are stored; Newton and
    complete sequences are truncated at whatever length was computed.
    """

    kind: str
    degree: int
    values: tuple
    ring: Ring

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidArgument(f"unknown representation {self.kind!r}")
        if self.degree < 0:
            raise InvalidArgument("degree must be non-negative")
        if self.kind == "poly" and len(self.values) > self.degree:
            extra = self.values[self.degree:]
            if any(not self.ring.is_zero(v) for v in extra):
                raise InvalidArgument("poly representation has nonzero sigma_k beyond the degree")
            object.__setattr__(self, "values", tuple(self.values[: self.degree]))

    def __len__(self):
        return len(self.values)

    def coeffs(self, length: int | None = None) -> list:
        """Polynomial coefficients ``[1, c_1, c_2, ...]`` with ``c_k = (-1)^k sigma_k``."""
        if self.kind != "poly":
            raise InvalidArgument("coefficients are only available for poly representations")
        R = self.ring
        out = [R.one] + [R.neg(v) if k % 2 else v for k, v in enumerate(self.values, 1)]
        if length is not None:
            out = (out + [R.zero] * length)[: length]
        return out


def factor_from_coeffs(coeffs, ring: Ring | None = None, degree: int | None = None) -> FactorRepr:
    """Build a poly-kind factor from ``[1, c_1, ..., c_d]``."""
    coeffs = list(coeffs)
    if ring is None:
        ring = infer_ring(coeffs)
    coeffs = [ring(c) for c in coeffs]
    if not coeffs or not ring.eq(coeffs[0], ring.one):
        raise InvalidArgument("local factor must have constant term 1")
    while len(coeffs) > 1 and ring.is_zero(coeffs[-1]) and (degree is None or len(coeffs) - 1 > degree):
        coeffs.pop()
    d = len(coeffs) - 1 if degree is None else degree
    sig = tuple(ring.neg(c) if k % 2 else c for k, c in enumerate(coeffs[1:], 1))
    return FactorRepr("poly", d, sig, ring)


def _poly_c(P: FactorRepr) -> list:
    """``[c_1, ..., c_d]`` with ``P = 1 + sum c_k T^k``."""
    R = P.ring
    return [R.neg(v) if k % 2 else v for k, v in enumerate(P.values, 1)]


def _require(P: FactorRepr, kind: str):
    if P.kind != kind:
        raise InvalidArgument(f"expected a {kind} representation, got {P.kind}")


def newton_from_poly(P: FactorRepr, ell: int) -> FactorRepr:
    """Power sums ``N_1..N_ell`` from the polynomial, i.e. ``-P'/P``.

    Uses ``N_k = -k c_k - sum_{i=1}^{k-1} c_i N_{k-i}``; no divisions.
    """
    _require(P, "poly")
    if ell < 1:
        raise InvalidArgument("ell must be >= 1")
    R = P.ring
    c = _poly_c(P)
    d = len(c)
    N = []
    for k in range(1, ell + 1):
        acc = R.neg(R.mul_int(c[k - 1], k)) if k <= d else None
        for i in range(1, min(k - 1, d) + 1):
            t = R.mul(c[i - 1], N[k - i - 1])
            acc = R.neg(t) if acc is None else R.sub(acc, t)
        N.append(R.zero if acc is None else acc)
    return FactorRepr("newton", P.degree, tuple(N), R)


def poly_from_newton(N: FactorRepr, ell: int, sign: int = -1) -> FactorRepr:
    """Invert power sums: ``P`` (``sign=-1``) or ``1/P`` (``sign=+1``).

    ``k h_k = sum_j N_j h_{k-j}`` and ``k c_k = -sum_j N_j c_{k-j}``.  The
    division by ``k`` goes through ``ring.div_int`` and raises
    :class:`~eulerprod.errors.DivisibilityError` when ``k`` is not invertible.
    With ``sign=-1`` the result holds ``sigma_1..sigma_min(ell, degree)``.
    """
    _require(N, "newton")
    if sign not in (1, -1):
        raise InvalidArgument("sign must be +1 or -1")
    if ell > len(N.values):
        raise InvalidArgument(f"need {ell} Newton sums, have {len(N.values)}")
    R = N.ring
    Nv = N.values
    top = ell if sign == 1 else min(ell, N.degree)
    out = [R.one]
    for k in range(1, top + 1):
        acc = R.mul(Nv[0], out[k - 1]) if k > 1 else Nv[0]
        for j in range(2, k + 1):
            acc = R.add(acc, Nv[j - 1] if j == k else R.mul(Nv[j - 1], out[k - j]))
        if k > 1:
            acc = R.div_int(acc, k)
        out.append(acc if sign == 1 else R.neg(acc))
    if sign == 1:
        return FactorRepr("complete", N.degree, tuple(out[1:]), R)
    sig = tuple(R.neg(v) if k % 2 else v for k, v in enumerate(out[1:], 1))
    return FactorRepr("poly", N.degree, sig, R)


def complete_from_poly(P: FactorRepr, ell: int) -> FactorRepr:
    """``h_1..h_ell`` from ``h_e = sum_{i=1}^{min(e,d)} (-1)^{i-1} sigma_i h_{e-i}``.

    Division free, so valid over any commutative ring.
    """
    _require(P, "poly")
    return FactorRepr("complete", P.degree, tuple(complete_sequence(P.values, ell, P.ring)), P.ring)


def complete_sequence(sigma, ell: int, R: Ring) -> list:
    """Raw recurrence behind :func:`complete_from_poly`; returns ``[h_1..h_ell]``."""
    d = len(sigma)
    h = [R.one]
    for e in range(1, ell + 1):
        acc = None
        for i in range(1, min(e, d) + 1):
            s = sigma[i - 1]
            if R.is_zero(s):
                continue
            t = s if e == i else R.mul(s, h[e - i])
            if acc is None:
                acc = t if i % 2 else R.neg(t)
            elif i % 2:
                acc = R.add(acc, t)
            else:
                acc = R.sub(acc, t)
        h.append(R.zero if acc is None else acc)
    return h[1:]


def h_from_partitions(N: FactorRepr, k: int):
    """``h_k = sum over partitions of k of prod N_i^{m_i} / (i^{m_i} m_i!)``."""
    _require(N, "newton")
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    R = N.ring
    if k == 0:
        return R.one
    if k > len(N.values):
        raise InvalidArgument(f"need {k} Newton sums, have {len(N.values)}")
    kf = factorial(k)
    total = R.zero
    for part in partitions(k):
        weight = kf // prod(i ** m * factorial(m) for i, m in part.items())
        term = R.one
        for i, m in part.items():
            term = R.mul(term, R.pow(N.values[i - 1], m))
        total = R.add(total, R.mul_int(term, weight))
    return R.div_int(total, kf)


def as_newton(P: FactorRepr, ell: int) -> FactorRepr:
    """Newton sums ``N_1..N_ell`` of a factor given in any representation."""
    if P.kind == "newton":
        if len(P.values) < ell:
            raise InvalidArgument(f"need {ell} Newton sums, have {len(P.values)}")
        return FactorRepr("newton", P.degree, P.values[:ell], P.ring)
    if P.kind == "poly":
        return newton_from_poly(P, ell)
    return newton_from_poly(poly_from_complete(P), ell)


def poly_from_complete(H: FactorRepr) -> FactorRepr:
    """Recover ``P`` from ``h_1..h_d`` by inverting the series ``1/P``."""
    _require(H, "complete")
    d = H.degree
    if len(H.values) < d:
        raise InvalidArgument(f"need {d} complete sums, have {len(H.values)}")
    R = H.ring
    h = [R.one] + list(H.values[:d])
    c = [R.one]
    for k in range(1, d + 1):
        acc = h[k]
        for j in range(1, k):
            acc = R.add(acc, R.mul(c[j], h[k - j]))
        c.append(R.neg(acc))
    sig = tuple(R.neg(v) if k % 2 else v for k, v in enumerate(c[1:], 1))
    return FactorRepr("poly", d, sig, R)


def convert(P: FactorRepr, kind: str, ell: int) -> FactorRepr:
    """Convert to ``kind`` keeping ``ell`` terms (poly keeps ``min(ell, d)``)."""
    if kind == P.kind and (kind == "poly" or len(P.values) >= ell):
        return P if kind == "poly" else FactorRepr(kind, P.degree, P.values[:ell], P.ring)
    if kind == "newton":
        return as_newton(P, ell)
    if kind == "complete":
        if P.kind == "poly":
            return complete_from_poly(P, ell)
        return poly_from_newton(P, ell, +1)
    # kind == "poly"
    if P.kind == "complete":
        return poly_from_complete(P)
    return poly_from_newton(P, min(ell, P.degree), -1)


def tensor_product(factors, ell: int, kind: str = "poly") -> FactorRepr:
    """First ``ell`` terms of the local factor whose roots are all products
    ``alpha_i beta_j ...`` of roots of the inputs, in representation ``kind``."""
    factors = list(factors)
    if not factors:
        raise InvalidArgument("tensor product of an empty list")
    if ell < 1:
        raise InvalidArgument("ell must be >= 1")
    R = factors[0].ring
    newt = [as_newton(P, ell) for P in factors]
    vals = list(newt[0].values)
    for Q in newt[1:]:
        vals = [R.mul(a, b) for a, b in zip(vals, Q.values)]
    degree = prod(P.degree for P in factors)
    out = FactorRepr("newton", degree, tuple(vals), R)
    return convert(out, kind, ell) if kind != "newton" else out


def root_power(P: FactorRepr, exponent: int, ell: int, kind: str = "newton") -> FactorRepr:
    """Factor whose roots are the ``exponent``-th powers of the roots of ``P``."""
    if exponent < 1:
        raise InvalidArgument("exponent must be >= 1")
    N = as_newton(P, exponent * ell)
    out = FactorRepr("newton", P.degree, N.values[exponent - 1 :: exponent][:ell], P.ring)
    return convert(out, kind, ell) if kind != "newton" else out


def sym_power(P: FactorRepr, k: int, ell: int, kind: str = "poly") -> FactorRepr:
    """First ``ell`` terms of ``Sym^k P`` (degree ``binom(d+k-1, k)``).

    ``N_l(Sym^k P) = h_k(P^{o l})``: for each ``l`` the Newton sums of the
    root power are a stride of those of ``P``, and ``h_k`` follows from the
    Newton recurrence.
    """
    if k < 0 or ell < 1:
        raise InvalidArgument("need k >= 0 and ell >= 1")
    R = P.ring
    d = P.degree
    degree = comb(d + k - 1, k) if d else (1 if k == 0 else 0)
    if k == 0:
        vals = tuple(R.one for _ in range(ell))
    else:
        N = as_newton(P, k * ell).values
        vals = []
        for l in range(1, ell + 1):
            rp = FactorRepr("newton", d, N[l - 1 :: l][:k], R)
            vals.append(poly_from_newton(rp, k, +1).values[k - 1])
        vals = tuple(vals)
    out = FactorRepr("newton", degree, vals, R)
    return convert(out, kind, ell) if kind != "newton" else out


def direct_sum(P: FactorRepr, Q: FactorRepr, ell: int) -> FactorRepr:
    """Local factor of the direct sum: polynomial product, Newton sums add."""
    R = P.ring
    degree = P.degree + Q.degree
    if P.kind == "newton" or Q.kind == "newton":
        a, b = as_newton(P, ell), as_newton(Q, ell)
        return FactorRepr("newton", degree, tuple(R.add(x, y) for x, y in zip(a.values, b.values)), R)
    a = convert(P, "poly", ell).coeffs()
    b = convert(Q, "poly", ell).coeffs()
    top = min(degree, ell)
    c = poly_mul_trunc(a, b, top + 1, R)
    sig = tuple(R.neg(v) if i % 2 else v for i, v in enumerate(c[1:], 1))
    return FactorRepr("poly", degree, sig, R)


def poly_mul_trunc(a, b, length: int, R: Ring) -> list:
    """Schoolbook product of coefficient lists truncated to ``length`` terms."""
    out = [R.zero] * length
    for i, x in enumerate(a[:length]):
        if R.is_zero(x):
            continue
        for j, y in enumerate(b[: length - i]):
            out[i + j] = R.add(out[i + j], R.mul(x, y))
    return out


def rankin_numerator(factors, ell_max: int | None = None) -> list:
    """Numerator ``A(T)`` with ``sum_k prod_i h_k(P_i) T^k = A(T) / (tensor of P_i)(T)``.

    Returns the coefficient list ``[A_0, ..., A_{D-1}]`` where ``D`` is the
    product of the degrees.  The product of the two series is computed to
    ``ell_max`` terms and every coefficient from ``D`` on must vanish; a
    nonzero one raises :class:`IntegrityError`.
    """
    factors = [convert(P, "poly", P.degree) for P in factors]
    if not factors:
        raise InvalidArgument("need at least one factor")
    R = factors[0].ring
    D = prod(P.degree for P in factors)
    if ell_max is None:
        ell_max = 2 * D
    if ell_max < D:
        raise InvalidArgument(f"ell_max must be >= {D}")
    hs = [complete_sequence(P.values, ell_max, R) for P in factors]
    series = [R.one]
    for k in range(ell_max):
        t = hs[0][k]
        for h in hs[1:]:
            t = R.mul(t, h[k])
        series.append(t)
    tens = tensor_product(factors, D, "poly").coeffs()
    A = poly_mul_trunc(series, tens, ell_max + 1, R)
    for j in range(D, ell_max + 1):
        if not R.is_zero(A[j]):
            raise IntegrityError(f"numerator coefficient at T^{j} does not cancel")
    A = A[:D]
    while len(A) > 1 and R.is_zero(A[-1]):
        A.pop()
    return A

