"""Cusp forms from linear combinations of products of Eisenstein series.

A decomposition file lists characters, products
``E_l^{phi_i,phi_j}|B_d * E_(k-l)^{phi_i',phi_j'}|B_d'`` and one coefficient
per product.  Coefficients are expressions in ``y`` (a root of the minimal
polynomial of the Hecke field) and ``z`` (a root of unity of order
``zeta_order``).  Modulo an FFT prime ``q`` the coefficients are reduced to a
``d x m`` matrix over ``F_q`` acting on the product series, and the resulting
coordinates on the power basis ``1, y, ..., y^(d-1)`` are lifted to integers
with the Ramanujan bound.
"""
from __future__ import annotations

import ast
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import lcm
from pathlib import Path

import mpmath
import numpy as np

from . import _kernels as K
from .chars import DirichletCharacter, RingEmbedding, conrey_character
from .eis import eisenstein_coeffs
from .errors import (
    DecompositionError,
    IntegrityError,
    InvalidArgument,
    LiftError,
    PrecisionError,
)
from .euler import ArrayProvider, CoeffSeq, PolyProvider, expand_precomp
from .ntt import FftPrime, find_fft_prime, series_mul
from .rings import ZZ, PrimeField, QuotientRing
from .sieve import CoprimeTable, rough_coprime_sieve

BUNDLED = ("level11", "level23", "level32", "level35f", "level35g", "level43")


# ---------------------------------------------------------------- expressions

class _Evaluator:
    """Evaluate arithmetic expressions over a quotient ring without ``eval``."""

    def __init__(self, ring: QuotientRing, names: dict):
        self.ring = ring
        self.names = dict(names)

    def __call__(self, source):
        if isinstance(source, (int, Fraction)):
            return self.ring(source)
        if isinstance(source, dict):
            return self._exponent_poly(source)
        if not isinstance(source, str):
            raise DecompositionError(f"cannot interpret coefficient {source!r}")
        try:
            tree = ast.parse(source, mode="eval")
        except SyntaxError as exc:
            raise DecompositionError(f"bad expression {source!r}: {exc}") from exc
        return self._eval(tree.body, source)

    def _exponent_poly(self, obj):
        try:
            order = int(obj["zeta_order"])
            terms = obj["exponent_poly"]
        except (KeyError, TypeError) as exc:
            raise DecompositionError(f"cyclotomic value needs zeta_order and exponent_poly: {obj!r}") from exc
        z = self.names.get("__zeta_of_order__")(order)
        R = self.ring
        out = R.zero
        for e, c in terms.items():
            coef = self.ring(Fraction(c) if isinstance(c, str) else c)
            out = R.add(out, R.mul(coef, R.pow(z, int(e) % order)))
        return out

    def _eval(self, node, src):
        R = self.ring
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise DecompositionError(f"only integer literals are allowed in {src!r}")
            return R(node.value)
        if isinstance(node, ast.Name):
            if node.id not in self.names or node.id.startswith("__"):
                raise DecompositionError(f"unknown symbol {node.id!r} in {src!r}")
            return self.names[node.id]
        if isinstance(node, ast.UnaryOp):
            v = self._eval(node.operand, src)
            if isinstance(node.op, ast.USub):
                return R.neg(v)
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
                    raise DecompositionError(f"exponents must be integer literals in {src!r}")
                e = node.right.value
                base = self._eval(node.left, src)
                return R.pow(base, e) if e >= 0 else R.pow(R.inv(base), -e)
            a = self._eval(node.left, src)
            b = self._eval(node.right, src)
            if isinstance(node.op, ast.Add):
                return R.add(a, b)
            if isinstance(node.op, ast.Sub):
                return R.sub(a, b)
            if isinstance(node.op, ast.Mult):
                return R.mul(a, b)
            if isinstance(node.op, ast.Div):
                try:
                    return R.mul(a, R.inv(b))
                except ZeroDivisionError as exc:
                    raise DecompositionError(f"division by a non-invertible element in {src!r}") from exc
        raise DecompositionError(f"unsupported syntax in {src!r}")


# ---------------------------------------------------------------- data model

@dataclass(frozen=True)
class BGDecomposition:
    """Eisenstein-product decomposition of one eigenform."""

    name: str
    weight: int
    level: int
    chars: tuple
    products: tuple
    minpoly: tuple | None
    basis_names: tuple
    zeta_order: int
    symbols: dict
    coefficients: tuple
    header: dict
    nebentypus: tuple = (1, 1)
    description: str = ""

    @property
    def degree(self) -> int:
        return 1 if self.minpoly is None else len(self.minpoly) - 1

    def characters(self) -> list[DirichletCharacter]:
        return [conrey_character(N, a) for N, a in self.chars]

    def order(self) -> int:
        """Order of the roots of unity needed by the characters and coefficients."""
        o = max(1, int(self.zeta_order))
        for chi in self.characters():
            o = lcm(o, chi.order)
        return o

    def nebentypus_character(self) -> DirichletCharacter:
        return conrey_character(*self.nebentypus)

    def header_coords(self) -> dict[int, tuple]:
        return {int(i): (tuple(v) if isinstance(v, (list, tuple)) else (v,)) for i, v in self.header.items()}

    def matrix_mod(self, embedding: RingEmbedding) -> np.ndarray:
        """Reduce the coefficients to a ``d x m`` int64 matrix over ``F_q``."""
        F = embedding.ring
        if not isinstance(F, PrimeField):
            raise InvalidArgument("matrix reduction needs a prime-field embedding")
        S = QuotientRing(self.minpoly if self.minpoly is not None else (0, 1), F, "y")
        O = embedding.order

        def zeta_of_order(o):
            if O % o:
                raise DecompositionError(f"root of unity of order {o} not available (embedding order {O})")
            return S(embedding.zeta_power(o))

        names = {"__zeta_of_order__": zeta_of_order}
        if self.minpoly is not None:
            names["y"] = S.gen()
            if self.basis_names and len(self.basis_names) > 1 and self.basis_names[1] != "y":
                names[self.basis_names[1]] = S.gen()
        if self.zeta_order > 1:
            z = zeta_of_order(self.zeta_order)
            names["z"] = z
            names["zeta"] = z
        ev = _Evaluator(S, names)
        for sym, expr in self.symbols.items():
            ev.names[sym] = ev(expr)
        cols = [ev(c) for c in self.coefficients]
        return np.array([[int(c[i]) for c in cols] for i in range(S.degree)], dtype=np.int64)


def _parse_fraction(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def load_decomposition(source) -> BGDecomposition:
    """Load a decomposition from a path, a JSON string/dict, or a bundled name."""
    if isinstance(source, BGDecomposition):
        return source
    if isinstance(source, dict):
        data = source
    else:
        src = str(source)
        name = src[:-5] if src.endswith(".json") else src
        if name in BUNDLED and not Path(src).exists():
            text = resources.files("eulerprod").joinpath("data", f"{name}.json").read_text("utf-8")
        elif Path(src).exists():
            text = Path(src).read_text("utf-8")
        elif src.lstrip().startswith("{"):
            text = src
        else:
            raise InvalidArgument(f"no decomposition named or located at {src!r}")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DecompositionError(f"invalid JSON: {exc}") from exc
    try:
        weight = int(data["weight"])
        level = int(data["level"])
        chars = tuple(tuple(int(x) for x in c) for c in data["chars"])
        products = tuple(tuple(int(x) for x in p) for p in data["products"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DecompositionError(f"missing or malformed field: {exc}") from exc
    basis = data.get("basis", {}) or {}
    minpoly = basis.get("minpoly")
    if minpoly is not None:
        minpoly = tuple(int(c) for c in minpoly)
        if len(minpoly) < 2 or minpoly[-1] != 1:
            raise DecompositionError("minimal polynomial must be monic with integer coefficients")
    coefficients = data.get("coefficients")
    if coefficients is None and "matrix" in data:
        coefficients = _matrix_to_expressions(data["matrix"])
    if coefficients is None or len(coefficients) != len(products):
        raise DecompositionError("need one coefficient per product")
    header = {str(k): v for k, v in (data.get("header") or {}).items()}
    if "length" in header and "coeffs" in header:
        header = {str(i + 1): v for i, v in enumerate(header["coeffs"])}
    dec = BGDecomposition(
        name=data.get("name", "decomposition"),
        weight=weight,
        level=level,
        chars=chars,
        products=products,
        minpoly=minpoly,
        basis_names=tuple(basis.get("names") or ()),
        zeta_order=int(data.get("zeta_order", 1)),
        symbols=dict(data.get("symbols") or {}),
        coefficients=tuple(coefficients),
        header=header,
        nebentypus=tuple(data.get("nebentypus") or (1, 1)),
        description=data.get("description", ""),
    )
    _validate(dec)
    return dec


def _matrix_to_expressions(matrix):
    """A ``d x m`` matrix of rationals/cyclotomic values -> one expression per column."""
    rows = matrix
    m = len(rows[0])
    out = []
    for j in range(m):
        terms = []
        for i, row in enumerate(rows):
            v = row[j]
            if isinstance(v, dict):
                raise DecompositionError("use the coefficients field for cyclotomic matrix entries")
            v = str(_parse_fraction(v))
            terms.append(f"({v})*y**{i}" if i else f"({v})")
        out.append(" + ".join(terms))
    return out


def _validate(dec: BGDecomposition):
    nchars = len(dec.chars)
    for N, a in dec.chars:
        conrey_character(N, a)
    for t in dec.products:
        if len(t) != 7:
            raise DecompositionError(f"product tuple {t} must have 7 entries")
        l, i, j, i2, j2, d, d2 = t
        if not 1 <= l <= dec.weight:
            raise DecompositionError(f"weight {l} out of range in {t}")
        for idx in (i, j, i2, j2):
            if not 1 <= idx <= nchars:
                raise DecompositionError(f"character index {idx} out of range in {t}")
        if d < 1 or d2 < 1:
            raise DecompositionError(f"dilations must be >= 1 in {t}")
    hdr = dec.header_coords()
    if 1 in hdr and tuple(hdr[1]) != (1,) + (0,) * (dec.degree - 1):
        raise DecompositionError("header must start with a_1 = 1")
    for v in hdr.values():
        if len(v) != dec.degree:
            raise DecompositionError(f"header entry {v} does not have {dec.degree} coordinates")


# ---------------------------------------------------------------- evaluation

def expand_operator(seq, d: int, n: int) -> np.ndarray:
    """Dilation ``f(z) -> f(dz)``: ``out[m] = seq[m/d]`` if ``d | m`` else 0, for ``0 <= m <= n``.

    No scalar factor is applied; normalisation constants live in the
    decomposition coefficients.
    """
    if d < 1:
        raise InvalidArgument("dilation must be >= 1")
    src = np.asarray(seq, dtype=np.int64)
    if d == 1:
        out = np.zeros(n + 1, dtype=np.int64)
        m = min(n + 1, src.shape[0])
        out[:m] = src[:m]
        return out
    if src.shape[0] < n // d + 1:
        raise InvalidArgument(f"need {n // d + 1} source coefficients for dilation by {d}")
    out = K.dilate(src, d, n)
    out[0] = src[0]
    return out


@dataclass
class MFResult:
    """Coefficients of one form modulo ``q`` and, when lifted, over the integers.

    ``indices`` are the computed indices (primes or ``1..n``); ``residues`` and
    ``values`` have shape ``(d, len(indices))`` with one row per basis element.
    """

    decomposition: BGDecomposition
    n: int
    prime: FftPrime
    indices: np.ndarray
    residues: np.ndarray
    values: np.ndarray | None = None
    header_checked: tuple = ()
    meta: dict = field(default_factory=dict)

    def as_dict(self) -> dict[int, tuple]:
        """``{index: coordinates}`` of the lifted values."""
        if self.values is None:
            raise InvalidArgument("values were not lifted")
        return {int(i): tuple(int(x) for x in self.values[:, t]) for t, i in enumerate(self.indices.tolist())}

    def extend(self, n: int | None = None, table: CoprimeTable | None = None) -> CoeffSeq:
        """All coefficients ``a_1..a_n`` from the prime ones by the Euler product."""
        if self.values is None:
            raise InvalidArgument("values were not lifted")
        n = self.n if n is None else n
        dec = self.decomposition
        aps = {p: tuple(int(x) for x in self.values[:, t]) for t, p in enumerate(self.indices.tolist())}
        bad = {p: [1, -aps[p][0]] if dec.degree == 1 else None for p in _prime_divisors(dec.level) if p in aps}
        if dec.degree > 1:
            bad = {p: [(1,) + (0,) * (dec.degree - 1), tuple(-x for x in aps[p])]
                   for p in _prime_divisors(dec.level) if p in aps}
        return multiplicative_extend(aps, dec.weight, dec.nebentypus_character(), bad, n,
                                     table=table, minpoly=dec.minpoly)


def _prime_divisors(N: int) -> list[int]:
    from sympy import primefactors

    return [int(p) for p in primefactors(N)]


def _eis_cache_key(l, i, j, length):
    return (l, i, j, length)


def mf_coefficients(dec, n: int, prime: FftPrime | int | None = None, mode: str = "primes",
                    lift: bool = True, threads: int = 1, table: CoprimeTable | None = None,
                    check_header: bool = True) -> MFResult:
    """Coefficients ``a_m`` (``m`` prime, or every ``1 <= m <= n``) of the form.

    Every Eisenstein factor comes from the Euler-product generator, factors
    are multiplied by NTT modulo ``q`` and the coordinates are obtained by
    the reduced coefficient matrix.  With ``lift`` the residues are lifted
    to integers, which requires ``q`` large enough for the Ramanujan bound.
    """
    dec = load_decomposition(dec)
    if mode not in ("primes", "all"):
        raise InvalidArgument("mode must be 'primes' or 'all'")
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    hdr = dec.header_coords()
    t_hdr = max(hdr) if (hdr and check_header) else 0
    length = max(n, t_hdr)
    O = dec.order()
    if prime is None:
        prime = find_fft_prime(length + 1, (O,))
    elif isinstance(prime, int):
        from .ntt import fft_prime_from_int

        prime = fft_prime_from_int(prime, (O,))
    emb = prime.embedding(O)
    q = prime.q
    B = dec.matrix_mod(emb)
    if table is None or table.n < length + 1:
        table = rough_coprime_sieve(length + 1)
    chars = dec.characters()

    if mode == "primes":
        idx = table.primes[table.primes <= n]
    else:
        idx = np.arange(1, n + 1, dtype=np.int64)
    hdr_idx = np.array(sorted(hdr), dtype=np.int64) if t_hdr else np.zeros(0, dtype=np.int64)

    cache = {}

    def eis(l, i, j, m):
        key = _eis_cache_key(l, i, j, m)
        if key not in cache:
            cache[key] = eisenstein_coeffs(l, chars[i - 1], chars[j - 1], m, emb, table).values
        return cache[key]

    # Eisenstein series are built sequentially (shared cache), products in parallel
    factors = []
    for (l, i, j, i2, j2, d, d2) in dec.products:
        # a dilation beyond the length leaves only the constant term
        f1 = expand_operator(eis(l, i, j, max(1, length // d)), d, length)
        if l == dec.weight:
            f2 = None
        else:
            f2 = expand_operator(eis(dec.weight - l, i2, j2, max(1, length // d2)), d2, length)
        factors.append((f1, f2))

    def work(pair):
        f1, f2 = pair
        prod = f1 if f2 is None else series_mul(f1, f1 if f2 is f1 else f2, length + 1, prime)
        return prod[idx], prod[hdr_idx]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, factors))
    else:
        results = [work(f) for f in factors]
    del factors, cache

    cols = np.stack([r[0] for r in results])
    residues = K.matvec_mod(B, cols, q)
    checked = ()
    if t_hdr:
        hcols = np.stack([r[1] for r in results])
        hres = K.matvec_mod(B, hcols, q)
        F = PrimeField(q)
        for t, i in enumerate(hdr_idx.tolist()):
            want = tuple(F(v) for v in hdr[i])
            got = tuple(int(x) for x in hres[:, t])
            if want != got:
                raise IntegrityError(
                    f"{dec.name}: coefficient a_{i} is {[F.balanced(x) for x in got]} mod {q}, "
                    f"header says {list(hdr[i])}"
                )
        checked = tuple(hdr_idx.tolist())
    res = MFResult(dec, n, prime, idx, residues, None, checked)
    if lift:
        bound = hasse_bound(dec.minpoly)
        res.values = lift_balanced(residues, _index_bounds(idx, dec.weight, mode), q, bound)
    return res


def _index_bounds(idx: np.ndarray, k: int, mode: str) -> np.ndarray:
    """Ramanujan bound on ``|sigma(a_m)|``: ``d(m) m^((k-1)/2)`` (``2 p^((k-1)/2)`` at primes)."""
    m = idx.astype(np.float64)
    if mode == "primes":
        ndiv = np.full(idx.shape[0], 2.0)
        ndiv[idx == 1] = 1.0
    else:
        n = int(idx.max()) if idx.size else 1
        ndiv = K.divisor_counts(n)[idx].astype(np.float64)
    return ndiv * np.power(m, (k - 1) / 2.0) * (1 + 1e-12)


# ---------------------------------------------------------------- lifting

@dataclass(frozen=True)
class HasseBound:
    """``B_val``: largest entry of ``Omega^-1``; ``row_sum``: largest absolute row sum.

    ``Omega[s, i] = sigma_s(y)^i`` over the complex embeddings ``sigma_s``.
    The lifting test uses ``row_sum``, which bounds every coordinate by
    ``row_sum * max_s |sigma_s(a)|``.
    """

    B_val: float
    row_sum: float


def hasse_bound(minpoly, dps: int = 60) -> HasseBound:
    """Bounds on the inverse of the embedding matrix of the power basis,
    computed at ``dps`` digits and rounded outward."""
    if minpoly is None or len(minpoly) == 2:
        return HasseBound(1.0, 1.0)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) for c in reversed(minpoly)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * dps)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise PrecisionError("root finding for the Hecke field did not converge") from exc
        d = len(roots)
        M = mpmath.matrix(d, d)
        for s, r in enumerate(roots):
            for i in range(d):
                M[s, i] = r ** i
        if abs(mpmath.det(M)) < mpmath.mpf(10) ** (-dps // 2):
            raise PrecisionError("embedding matrix is numerically singular")
        Minv = M ** -1
        entries = [[abs(Minv[i, j]) for j in range(d)] for i in range(d)]
        pad = 1 + mpmath.mpf(2) ** -40
        bval = max(max(r) for r in entries) * pad
        rsum = max(sum(r) for r in entries) * pad
        return HasseBound(float(mpmath.nstr(bval, 20)) * (1 + 1e-15), float(rsum) * (1 + 1e-15))


def lift_balanced(residues, bounds, q: int, hasse: HasseBound | None = None) -> np.ndarray:
    """Balanced lift of residues in ``[0, q)`` to ``(-q/2, q/2]``.

    ``bounds[t]`` bounds every embedding of the value at position ``t``;
    the lift is certified when ``row_sum * bounds[t] <= (q - 1)/2``.
    Raises :class:`LiftError` at the first position where it is not.
    """
    res = np.asarray(residues, dtype=np.int64)
    factor = 1.0 if hasse is None else hasse.row_sum
    if bounds is not None:
        b = np.broadcast_to(np.asarray(bounds, dtype=np.float64), res.shape[-1:]) * factor
        bad = np.nonzero(b > (q - 1) / 2)[0]
        if bad.size:
            raise LiftError(int(bad[0]), float(b[bad[0]]), q)
    half = q // 2
    return np.where(res > half, res - q, res)


def crt_combine(runs, bound=None) -> list:
    """Balanced CRT lift of ``[(q_1, residues_1), (q_2, residues_2), ...]``.

    Residue arrays must share a shape; the result is a nested list of Python
    integers in ``(-Q/2, Q/2]`` with ``Q = prod q_i``.  When ``bound`` is
    given, any value exceeding it raises :class:`IntegrityError`.
    """
    if not runs:
        raise InvalidArgument("need at least one run")
    qs = [int(q) for q, _ in runs]
    if len(set(qs)) != len(qs):
        raise InvalidArgument("moduli must be distinct")
    arrs = [np.asarray(r, dtype=object) for _, r in runs]
    shape = arrs[0].shape
    if any(a.shape != shape for a in arrs):
        raise InvalidArgument("residue arrays must have the same shape")
    Q = 1
    for q in qs:
        Q *= q
    flat = [a.reshape(-1).tolist() for a in arrs]
    out = []
    coef = []
    for q in qs:
        Qi = Q // q
        coef.append(Qi * pow(Qi, -1, q))
    for vals in zip(*flat):
        v = sum(int(r) * c for r, c in zip(vals, coef)) % Q
        if v > Q // 2:
            v -= Q
        if bound is not None and abs(v) > bound:
            raise IntegrityError(f"reconstructed value {v} exceeds bound {bound}")
        out.append(v)
    return np.array(out, dtype=object).reshape(shape).tolist()


# ---------------------------------------------------------------- extension

def multiplicative_extend(prime_coeffs: dict, k: int, chi: DirichletCharacter, bad_factors: dict, n: int,
                          table: CoprimeTable | None = None, minpoly=None) -> CoeffSeq:
    """All coefficients from prime ones via ``F_p = 1 - a_p T + chi(p) p^(k-1) T^2``.

    ``prime_coeffs`` maps primes to ``a_p`` (integers, or coordinate tuples
    over ``Z[y]/(minpoly)``).  Primes dividing the modulus of ``chi`` need an
    entry in ``bad_factors`` (coefficient list ``[1, c_1, ...]``).
    ``chi`` must be real-valued (quadratic or trivial).
    """
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    if chi.order > 2:
        raise InvalidArgument("only real nebentypus characters are supported")
    N = chi.modulus
    if table is None or table.n < n + 1:
        table = rough_coprime_sieve(max(n + 1, 2))
    primes = [p for p in table.primes.tolist() if p <= n]
    missing = [p for p in primes if p not in prime_coeffs]
    if missing:
        raise InvalidArgument(f"missing a_p for primes {missing[:10]}")
    need = [p for p in primes if N % p == 0 and p not in bad_factors]
    if need:
        raise InvalidArgument(f"bad primes {need} dividing {N} need explicit local factors")

    def chi_val(p):
        t = chi.exponent(p)
        return 0 if t < 0 else (1 if t == 0 else -1)

    if minpoly is None or len(minpoly) == 2:
        aps = np.array([_scalar(prime_coeffs[p]) for p in primes], dtype=object)
        if all(abs(int(v)) < 1 << 40 for v in aps) and (n < 2 or float(n) ** (k - 1) < 2.0 ** 40):
            sig = np.zeros((len(primes), 2), dtype=np.int64)
            for t, p in enumerate(primes):
                sig[t, 0] = int(aps[t])
                sig[t, 1] = chi_val(p) * p ** (k - 1)
            prov = ArrayProvider(np.array(primes, dtype=np.int64), sig, ZZ,
                                 overrides={p: list(bad_factors[p]) for p in bad_factors if p <= n})
            return expand_precomp(prov, table, n)

        def fn(p):
            if p in bad_factors:
                return list(bad_factors[p])
            return [1, -_scalar(prime_coeffs[p]), chi_val(p) * p ** (k - 1)]

        return expand_precomp(PolyProvider(fn, ZZ, 2), table, n)

    S = QuotientRing(minpoly, ZZ, "y")

    def fn_q(p):
        if p in bad_factors:
            return [S(tuple(c)) if isinstance(c, (list, tuple)) else S(c) for c in bad_factors[p]]
        ap = S(tuple(prime_coeffs[p]))
        return [S.one, S.neg(ap), S(chi_val(p) * p ** (k - 1))]

    return expand_precomp(PolyProvider(fn_q, S, 2), table, n)


def _scalar(v):
    if isinstance(v, (tuple, list)):
        if len(v) != 1:
            raise InvalidArgument("expected a rational coefficient")
        return int(v[0])
    return int(v)
