"""Command-line interface: ``python -m eulerprod <subcommand> ...``.

Exit status 0 on success, 2 for invalid arguments or input files, 3 for a
failed computation, 4 when a length or modulus exceeds the supported range.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import coeffio
from .errors import CapacityError, DecompositionError, EulerProdError, InvalidArgument, ProviderError

EXIT_OK, EXIT_ARGS, EXIT_COMPUTE, EXIT_CAPACITY = 0, 2, 3, 4


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(f"{self.prog}: {message}")


def _char(text: str):
    from .chars import conrey_character

    try:
        N, a = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidArgument(f"character must be given as N,a (got {text!r})") from exc
    return conrey_character(N, a)


def _emit(args, indices, values, comments=()):
    """Write records to ``--out`` (text or ``--binary``) or to stdout."""
    if getattr(args, "binary", False):
        if not args.out:
            raise InvalidArgument("--binary needs --out")
        coeffio.write_binary(args.out, indices, values)
        return
    text = "".join(f"# {c}\n" for c in comments) + coeffio.format_text(indices, values)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _coords(v):
    if isinstance(v, tuple):
        return tuple(int(x) for x in v)
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise InvalidArgument(f"non-integral coefficient {v}")
        return (int(v),)
    return (int(v),)


def _seq_records(seq, start=1):
    vals = seq.tolist()
    return list(range(start, len(vals))), [_coords(v) for v in vals[start:]]


# ---------------------------------------------------------------- inputs

def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InvalidArgument(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"{path}: invalid JSON: {exc}") from exc


def _factor_spec(data):
    from .rings import QQ, ZZ

    ring = {"ZZ": ZZ, "QQ": QQ}.get(data.get("ring", "ZZ"))
    if ring is None:
        raise InvalidArgument(f"unknown ring {data.get('ring')!r}; use ZZ or QQ")
    factors = {int(p): [ring(c) for c in cs] for p, cs in (data.get("factors") or {}).items()}
    default = data.get("default")
    default = None if default is None else [ring(c) for c in default]
    return ring, factors, default


def _is_factor_file(source) -> bool:
    p = Path(source)
    if not p.exists() or p.suffix != ".json":
        return False
    data = _load_json(p)
    return isinstance(data, dict) and ("factors" in data or "default" in data) and "products" not in data


def _object(source, n, prime=None):
    """An ArithmeticObject from a factor file, a decomposition, or ``conj:<decomposition>``."""
    from .lprod import ArithmeticObject, objects_from_bg

    conj = source.startswith("conj:")
    if conj:
        source = source[5:]
    if _is_factor_file(source):
        if conj:
            raise InvalidArgument("conj: applies to decompositions only")
        data = _load_json(source)
        ring, factors, default = _factor_spec(data)
        degree = int(data.get("degree", len(default) - 1 if default else max(len(c) for c in factors.values()) - 1))

        def local(p):
            if p in factors:
                return factors[p]
            if default is None:
                raise InvalidArgument(f"{source}: no factor for p={p} and no default")
            return default

        ram = frozenset(int(p) for p in data.get("ramified", []))
        return ArithmeticObject(degree, int(data.get("weight", 0)), local, ring, {}, ram, Path(source).stem)
    obj = objects_from_bg(source, max(n, 2), prime=prime)
    return obj.conjugate() if conj else obj


def _overrides(path):
    if not path:
        return None
    return {int(p): c for p, c in _load_json(path).items()}


# ---------------------------------------------------------------- commands

def cmd_sieve(args):
    from .sieve import rough_coprime_sieve

    t = rough_coprime_sieve(args.length)
    out = [f"n={t.n}", f"primes={len(t.primes)}", f"decomps={len(t.decomp_k)}", f"unlinks={t.unlinks}"]
    lines = [f"# {x}" for x in out]
    if args.print_primes:
        lines += [str(p) for p in t.primes.tolist()]
    if args.print_decomps:
        lines += [f"{k} = {pe} * {m}" for k, pe, m in zip(t.decomp_k.tolist(), t.decomp_pe.tolist(),
                                                            t.decomp_m.tolist())]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_eisenstein(args):
    from .chars import RingEmbedding, eis_constant_term
    from .eis import eisenstein_coeffs
    from .ntt import find_fft_prime, fft_prime_from_int
    from math import lcm

    phi, psi = _char(args.phi), _char(args.psi)
    n, k = args.length, args.weight
    o = lcm(phi.order, psi.order)
    prime = fft_prime_from_int(args.prime, (o,)) if args.prime else find_fft_prime(2, (o,), min_bits=55)
    emb = prime.embedding(o)
    seq = eisenstein_coeffs(k, phi, psi, n, emb)
    q = prime.q
    vals = seq.values
    comments = []
    if o <= 2 and not args.prime:
        # real values: |a_m| <= d(m) m^(k-1), lifted exactly while that is below q/2
        from . import _kernels as K

        d = K.divisor_counts(n)
        m = np.arange(n + 1, dtype=np.float64)
        if float(np.max(d[1:] * m[1:] ** (k - 1))) >= (q - 1) / 2:
            raise CapacityError(f"coefficients up to index {n} may exceed q/2 for q={q}; give --prime")
        const = eis_constant_term(k, phi, psi, RingEmbedding.cyclotomic(o))
        comments.append(f"a0 = {const}")
    else:
        comments.append(f"residues mod q={q}, zeta={emb.zeta} of order {o}")
    half = q // 2
    recs = [int(v) - q if v > half else int(v) for v in vals[1:].tolist()]
    _emit(args, range(1, n + 1), recs, comments)


def cmd_euler_expand(args):
    from .euler import MappingProvider, expand
    from .rings import PrimeField

    data = _load_json(args.factors)
    ring, factors, default = _factor_spec(data)
    R = PrimeField(args.prime) if args.prime else ring
    prov = MappingProvider(factors, default, R)
    seq = expand(prov, args.length)
    if args.prime:
        recs = seq.to_ints(balanced=True)[1:]
        _emit(args, range(1, args.length + 1), recs, [f"residues mod q={args.prime}"])
    else:
        _emit(args, *_seq_records(seq))


def cmd_tensor(args):
    from .lprod import dirichlet_tensor

    objs = [_object(s, args.length) for s in args.factors]
    seq = dirichlet_tensor(objs, args.length, overrides=_overrides(args.overrides))
    _emit(args, *_seq_records(seq))


def cmd_sympow(args):
    from .lprod import dirichlet_sym_power

    obj = _object(args.factors, args.length)
    seq = dirichlet_sym_power(obj, args.k, args.length, overrides=_overrides(args.overrides))
    _emit(args, *_seq_records(seq))


def cmd_mf_coefs(args):
    from .bgform import load_decomposition, mf_coefficients

    dec = load_decomposition(args.decomp)
    mode = "all" if args.all else "primes"
    res = mf_coefficients(dec, args.length, prime=args.prime, mode=mode, threads=args.threads)
    _emit(args, res.indices.tolist(), [tuple(c) for c in res.values.T.tolist()])


def cmd_triple(args):
    from .lprod import triple_product

    h = args.h if args.h else "conj:" + args.g
    f, g, hh = (_object(s, args.length, args.prime) for s in (args.f, args.g, h))
    seq = triple_product(f, g, hh, args.level, args.length)
    _emit(args, *_seq_records(seq))


def cmd_bench(args):
    from .bgform import mf_coefficients
    from .chars import conrey_character
    from .eis import eisenstein_coeffs
    from .euler import PolyProvider, expand_precomp
    from .ntt import find_fft_prime
    from .rings import ZZ, CountingRing, OpCounter
    from .sieve import rough_coprime_sieve

    n = args.length
    out = [f"n={n}"]
    t0 = time.perf_counter()
    table = rough_coprime_sieve(n + 1)
    out.append(f"sieve_seconds={time.perf_counter() - t0:.6f}")
    out.append(f"sieve_unlinks={table.unlinks}")

    if args.ops:
        cnt = OpCounter()
        prov = PolyProvider(lambda p: [1, p % 7 - 3, p], ZZ, 2)
        t0 = time.perf_counter()
        expand_precomp(prov, table, n, ring=CountingRing(ZZ, cnt))
        out.append(f"euler_counted_seconds={time.perf_counter() - t0:.6f}")
        out += [f"euler_{k}={v}" for k, v in cnt.as_dict().items()]
        psi = conrey_character(23, 22)
        emb = find_fft_prime(2, (psi.order,)).embedding(psi.order)
        cnt = OpCounter()
        eisenstein_coeffs(1, conrey_character(1, 1), psi, n, emb, table, ring=CountingRing(emb.ring, cnt),
                          constant=False)
        out += [f"eis_k1_{k}={v}" for k, v in cnt.as_dict().items()]

    t0 = time.perf_counter()
    mf_coefficients(args.decomp, n, mode="all", threads=args.threads, table=table)
    out.append(f"mf_{Path(str(args.decomp)).stem}_seconds={time.perf_counter() - t0:.6f}")
    text = "\n".join(out) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="eulerprod", description="Dirichlet and modular-form coefficients from Euler products.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, binary=True):
        p.add_argument("--out", help="output file (default stdout)")
        if binary:
            p.add_argument("--binary", action="store_true", help="write the 64-bit binary format to --out")
        p.add_argument("--threads", type=int, default=1, help="worker threads for independent products")

    p = sub.add_parser("sieve", help="rough-coprime sieve statistics and decompositions")
    p.add_argument("--length", type=int, required=True, help="exclusive index bound n")
    p.add_argument("--print-decomps", action="store_true")
    p.add_argument("--print-primes", action="store_true")
    common(p, binary=False)
    p.set_defaults(fn=cmd_sieve)

    p = sub.add_parser("eisenstein", help="coefficients of E_k^{phi,psi}")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--phi", required=True, help="Conrey label N,a")
    p.add_argument("--psi", required=True, help="Conrey label N,a")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--prime", type=int, help="work modulo this prime and print balanced residues")
    common(p)
    p.set_defaults(fn=cmd_eisenstein)

    p = sub.add_parser("euler-expand", help="expand an Euler product given by a factor file")
    p.add_argument("--factors", required=True, help="JSON {factors: {p: [1, c1, ...]}, default: [...], ring}")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--prime", type=int)
    common(p)
    p.set_defaults(fn=cmd_euler_expand)

    p = sub.add_parser("tensor", help="coefficients of a tensor product")
    p.add_argument("--factors", nargs="+", required=True,
                   help="factor files or decompositions (prefix conj: for the Galois conjugate)")
    p.add_argument("--overrides", help="JSON {p: [1, c1, ...]} for primes ramified in several factors")
    p.add_argument("--length", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("sympow", help="coefficients of a symmetric power")
    p.add_argument("--factors", required=True, help="factor file or decomposition")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--overrides")
    p.add_argument("--length", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_sympow)

    p = sub.add_parser("mf-coefs", help="modular form coefficients from an Eisenstein-product decomposition")
    p.add_argument("--decomp", required=True, help="decomposition JSON file or bundled name (e.g. level11)")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--prime", type=int, help="FFT prime (default: smallest suitable 53-bit prime)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--primes-only", action="store_true", help="only prime indices (default)")
    g.add_argument("--all", action="store_true", help="every index 1..n")
    common(p)
    p.set_defaults(fn=cmd_mf_coefs)

    p = sub.add_parser("triple", help="triple product of three newforms of the same level")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", help="default: Galois conjugate of --g")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--prime", type=int)
    common(p)
    p.set_defaults(fn=cmd_triple)

    p = sub.add_parser("bench", help="timings and operation counts as metric=value lines")
    p.add_argument("--length", type=int, default=1 << 16)
    p.add_argument("--decomp", default="level11")
    p.add_argument("--ops", action="store_true", help="also run the instrumented (slow) counting passes")
    common(p, binary=False)
    p.set_defaults(fn=cmd_bench)
    return ap


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _ArgError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ARGS
    if getattr(args, "threads", 1) < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return EXIT_ARGS
    try:
        args.fn(args)
    except (InvalidArgument, DecompositionError) as exc:
        print(f"error [{_module_of(exc)}]: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (CapacityError, MemoryError) as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ProviderError as exc:
        print(f"error [euler]: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except EulerProdError as exc:
        print(f"error [{_module_of(exc)}]: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def _module_of(exc) -> str:
    tb = exc.__traceback__
    name = "eulerprod"
    while tb is not None:
        mod = tb.tb_frame.f_globals.get("__name__", "")
        if mod.startswith("eulerprod.") and not mod.endswith((".cli", ".errors")):
            name = mod.split(".")[-1]
        tb = tb.tb_next
    return name


def main():
    sys.exit(run())
