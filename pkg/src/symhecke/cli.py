"""Command-line front end.

Exit codes: 0 when everything requested verified, 1 when a claim is
falsified (the witness is printed), 2 for usage or bounds errors.

>>> main(["dim", "--algebra", "A", "--n", "3"])
34
0
>>> main(["verify", "HB.quasi_idem", "--n", "2"])
HB.quasi_idem n=2: verified
0
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import coxeter as cx
from .combinat import FAMILIES, bratteli, closed_form_dim
from .expr import FusedAlgebra, HeckeAlgebra, ParseError, evaluate, serialize
from .fused import FusedContext, verify_isomorphism
from .hecke import Ambient, HeckeElement, to_json
from .quotient import (
    DivisibilityError,
    build_context,
    spec_A,
    spec_AK,
    spec_C,
    spec_C2_presentation,
    spec_CK,
    structure_constants,
)
from .ring import scalar_to_json
from .verify import CLAIMS, BoundsError, run_verification

__all__ = ["main", "build_parser"]

ALGEBRAS = ("HB", "A", "C", "C2pres", "AK", "CK")
MAX_N = 5


class UsageError(Exception):
    pass


def _add_algebra_flags(p: argparse.ArgumentParser, default: str = "A"):
    p.add_argument("--algebra", choices=ALGEBRAS, default=default,
                   help="HB: H(n); A: A_n; C: C_{n,N}; C2pres: C_{n,2} by short relations; "
                        "AK: A_n^(k); CK: C_{n,N}^(k)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=None, help="specialise a1 = q^-2, a2 = q^2k")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--variant", choices=("tilde", "eprime"), default="tilde",
                   help="extra relation for CK: tildeE_(k+1) or E'_(k+1)")
    p.add_argument("--cache", default=None, help="directory for cached quotient contexts")


def _add_format(p: argparse.ArgumentParser, choices=("text", "json"), default="text"):
    p.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symhecke", description="Exact computations in cyclotomic Hecke algebras.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("dim", help="dimension of an algebra")
    _add_algebra_flags(p)
    _add_format(p)

    p = sub.add_parser("basis", help="basis of a quotient algebra")
    _add_algebra_flags(p)
    _add_format(p)

    p = sub.add_parser("compute", help="evaluate an expression")
    p.add_argument("expr")
    _add_algebra_flags(p, default="HB")
    p.add_argument("--fused", action="store_true", help="evaluate in H_{k,n}")
    _add_format(p)

    p = sub.add_parser("verify", help="run registry claims")
    p.add_argument("claims", nargs="*", help="claim ids (default: all)")
    p.add_argument("--all", action="store_true", help="run every claim on its full parameter grid")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--family")
    p.add_argument("--depth", type=int)
    p.add_argument("--list", action="store_true", help="list claim ids")
    _add_format(p)

    p = sub.add_parser("bratteli", help="branching graph")
    p.add_argument("--family", required=True, help="HB, A, C, C2, fused, seam")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--k", type=int)
    p.add_argument("--N", type=int)
    _add_format(p, ("dot", "json", "text"), "text")

    p = sub.add_parser("structure-constants", help="c_{u,v}^w in the quotient basis")
    _add_algebra_flags(p)
    p.add_argument("--limit", type=int, default=200)
    _add_format(p)

    p = sub.add_parser("fused", help="the fused Hecke algebra H_{k,n}")
    fs = p.add_subparsers(dest="fcmd", required=True)
    for name, hlp in (("build", "coset basis and dimension"), ("verify-iso", "check the isomorphism"),
                      ("element", "evaluate an expression")):
        fp = fs.add_parser(name, help=hlp)
        if name == "element":
            fp.add_argument("expr")
        fp.add_argument("--k", type=int, required=True)
        fp.add_argument("--n", type=int, required=True)
        _add_format(fp)
    return ap


# ----------------------------------------------------------------------


def _check_n(n: int):
    if not 0 <= n <= MAX_N:
        raise BoundsError(f"n={n} outside [0, {MAX_N}]")


def _spec(args):
    n, k, N = args.n, args.k, args.N
    _check_n(n)
    alg = args.algebra
    if alg in ("C", "CK") and not 2 <= N <= 4:
        # N = 1 degenerates to a one-dimensional quotient that is slow to saturate generically
        raise BoundsError(f"N={N} outside [2, 4]")
    if alg == "A":
        return spec_A(n, k)
    if alg == "C":
        return spec_C(n, N, k)
    if alg == "C2pres":
        if k is not None:
            raise UsageError("C2pres is not specialised")
        return spec_C2_presentation(n)
    if k is None:
        raise UsageError(f"--algebra {alg} needs --k")
    if alg == "AK":
        return spec_AK(n, k)
    if alg == "CK":
        return spec_CK(n, N, k, args.variant)
    raise UsageError(f"algebra {alg} has no quotient context")


def _context(args):
    return build_context(_spec(args), cache_dir=args.cache)


def _emit(obj, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(obj, indent=1))
    else:
        print(text)


def _cmd_dim(args) -> int:
    if args.algebra == "HB":
        _check_n(args.n)
        d = closed_form_dim("HB", args.n)
        _emit({"algebra": "HB", "n": args.n, "dim": d}, args.format, str(d))
        return 0
    ctx = _context(args)
    obj = {"algebra": args.algebra, "n": args.n, "k": args.k, "dim": ctx.dim,
           "expected": ctx.spec.expected_dim, "pattern_basis": ctx.pivots_disjoint}
    _emit(obj, args.format, str(ctx.dim))
    return 0


def _cmd_basis(args) -> int:
    if args.algebra == "HB":
        _check_n(args.n)
        ws = cx.enumerate_signed(args.n)
    else:
        ws = _context(args).basis
    rows = [{"window": cx.window_str(w), "word": "".join(map(str, cx.canonical_reduced_word(w)))} for w in ws]
    text = "\n".join(f"{r['window']}\t{r['word'] or '1'}" for r in rows)
    _emit(rows, args.format, text)
    return 0


def _fused_json(e) -> dict:
    return {
        "algebra": f"H_({e.ctx.k},{e.ctx.n})",
        "coords": [{"rep": cx.window_str(r), "coeff": scalar_to_json(e.coords[r])} for r in e.ctx.reps if r in e.coords],
    }


def _fused_ctx(k: int, n: int) -> FusedContext:
    if not 1 <= k <= 3 or not 0 <= n <= 4 or k + n > 6:
        raise BoundsError("fused contexts need 1 <= k <= 3, 0 <= n <= 4, k+n <= 6")
    return FusedContext(k, n)


def _cmd_compute(args) -> int:
    if args.fused:
        if args.k is None:
            raise UsageError("--fused needs --k")
        alg = FusedAlgebra(_fused_ctx(args.k, args.n))
    elif args.algebra == "HB":
        _check_n(args.n)
        alg = HeckeAlgebra(Ambient("B", args.n, args.k))
    else:
        ctx = _context(args)
        alg = HeckeAlgebra(ctx.ambient, ctx)
    e = evaluate(args.expr, alg)
    if isinstance(e, HeckeElement):
        _emit(to_json(e), args.format, serialize(e))
    else:
        _emit(_fused_json(e), args.format, serialize(e))
    return 0


def _print_report(r, fmt: str):
    if fmt == "json":
        print(json.dumps(r.to_json()))
        return
    ps = " ".join(f"{a}={b}" for a, b in r.params.items())
    line = f"{r.claim} {ps}: {r.status}"
    if r.witness:
        line += f" [{r.witness}]"
    print(line)
    if r.status == "divisibility-holds" and "element" in r.details:
        terms = r.details["element"]["terms"]
        print(f"  quotient element has {len(terms)} terms over C[q^+-1]")
    if r.status == "divisibility-fails":
        print(f"  coefficient at {r.details.get('witness_word')}: {r.details.get('coefficient')}")


def _cmd_verify(args) -> int:
    if args.list:
        for c in CLAIMS:
            print(c)
        return 0
    names = args.claims or list(CLAIMS)
    for c in names:
        if c not in CLAIMS:
            raise UsageError(f"unknown claim {c!r}; use --list")
    given = {key: getattr(args, key) for key in ("n", "k", "N", "family", "depth")}
    given = {key: v for key, v in given.items() if v is not None}
    jobs = []
    for c in sorted(names):
        if args.all:
            jobs.extend((c, p) for p in CLAIMS[c].grid)
        else:
            accepted = CLAIMS[c].defaults.keys() | ({"k", "N"} if c == "DIM.cross" else set())
            jobs.append((c, {key: v for key, v in given.items() if key in accepted}))
    worst = 0
    for c, p in jobs:
        r = run_verification(c, p)
        _print_report(r, args.format)
        if not r.ok:
            worst = 1
    return worst


def _cmd_bratteli(args) -> int:
    fam = args.family
    lookup = {f.lower(): f for f in FAMILIES}
    if fam.lower() not in lookup:
        raise UsageError(f"unknown family {fam!r}")
    fam = lookup[fam.lower()]
    if not 0 <= args.depth <= 10:
        raise BoundsError("depth must be in [0, 10]")
    try:
        d = bratteli(fam, args.depth, k=args.k, N=args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dot":
        print(d.to_dot())
    elif args.format == "json":
        print(d.to_json())
    else:
        for n in range(args.depth + 1):
            print(f"n={n}: dim {d.level_dim(n)}: " + ", ".join(str(x) for x in d.dims[n].values()))
    return 0


def _cmd_structure_constants(args) -> int:
    ctx = _context(args)
    try:
        sc = structure_constants(ctx, args.limit)
    except ValueError as exc:
        raise BoundsError(str(exc)) from None
    if args.format == "json":
        out = []
        for (u, v), row in sc.items():
            out.append({"u": cx.window_str(u), "v": cx.window_str(v),
                        "product": [{"w": cx.window_str(w), "coeff": scalar_to_json(c)} for w, c in row.items()]})
        print(json.dumps(out))
    else:
        for (u, v), row in sc.items():
            terms = " + ".join(f"({c})*[{cx.window_str(w)}]" for w, c in row.items()) or "0"
            print(f"[{cx.window_str(u)}] * [{cx.window_str(v)}] = {terms}")
    return 0


def _cmd_fused(args) -> int:
    ctx = _fused_ctx(args.k, args.n)
    if args.fcmd == "build":
        obj = {"k": args.k, "n": args.n, "dim": len(ctx.reps), "reps": [cx.window_str(r) for r in ctx.reps]}
        _emit(obj, args.format, f"dim H_({args.k},{args.n}) = {len(ctx.reps)}\n"
              + "\n".join(cx.window_str(r) for r in ctx.reps))
        return 0
    if args.fcmd == "verify-iso":
        res = verify_isomorphism(args.k, args.n, ctx)
        res["seconds"] = round(res["seconds"], 3)
        status = "verified" if res["ok"] else "falsified"
        _emit(dict(res, status=status), args.format,
              f"isomorphism k={args.k} n={args.n}: {status} (dim {res['dim_formula']}, image rank {res['image_rank']})")
        return 0 if res["ok"] else 1
    e = evaluate(args.expr, FusedAlgebra(ctx))
    _emit(_fused_json(e), args.format, serialize(e))
    return 0


_COMMANDS = {
    "dim": _cmd_dim,
    "basis": _cmd_basis,
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "bratteli": _cmd_bratteli,
    "structure-constants": _cmd_structure_constants,
    "fused": _cmd_fused,
}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.cmd](args)
    except DivisibilityError as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return 1
    except (UsageError, BoundsError, ParseError, KeyError, IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
