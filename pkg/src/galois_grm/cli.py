"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or parameters.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import reproduce_length16, run_all
from .errors import GrmError
from .ff import is_prime
from .grm import (
    MAX_GROUP_SIZE,
    build_context,
    code_dimension,
    f_nu_degree,
    weight_count,
)
from .serialize import dumps, genmatrix_payload, radical_payload


class UsageError(Exception):
    pass


def _coeffs(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_params(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="characteristic (prime)")
    sp.add_argument("--r", type=int, required=True, help="q = p^r")
    sp.add_argument("--m", type=int, required=True, help="rank of the Galois ring")
    sp.add_argument("--ordering", choices=["integer", "gamma"], default="integer")
    sp.add_argument("--fbar", type=_coeffs, help="irreducible over F_p, low degree first (e.g. 1,1,1)")
    sp.add_argument("--ext-modulus", type=_coeffs, help="modulus of F_{q^m}, low degree first")
    sp.add_argument("--gamma", type=int, help="encoding of the primitive element of F_{q^m}")


def _validate(args) -> None:
    if not is_prime(args.p):
        raise UsageError("p must be prime")
    if args.r < 1 or args.m < 1:
        raise UsageError("r and m must be >= 1")
    if (args.p**args.r) ** args.m > MAX_GROUP_SIZE:
        raise UsageError(f"q^m must not exceed {MAX_GROUP_SIZE}")
    if args.ordering == "gamma" and args.r != 1:
        raise UsageError("--ordering gamma requires r = 1")


def _context(args, **extra):
    _validate(args)
    return build_context(args.p, args.r, args.m, ordering=args.ordering, fbar=args.fbar,
                         ext_modulus=args.ext_modulus, gamma=args.gamma, **extra)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_params(args) -> int:
    ctx = _context(args)
    top = ctx.top
    lines = [
        f"p = {ctx.p}, r = {ctx.r}, m = {ctx.m}",
        f"q = {ctx.q}, n = q^m - 1 = {ctx.n}, m(q-1) = {top}",
        f"h = {list(ctx.ring.h)}",
        f"F_q modulus = {list(ctx.field.modulus)}",
        f"F_q^m modulus = {list(ctx.ext.modulus)}",
        f"gamma = {ctx.gamma.value}",
        f"ordering = {ctx.ordering.kind}",
        "",
        "t  N(t)",
    ]
    lines += [f"{t:<2} {weight_count(t, ctx.q, ctx.m)}" for t in range(top + 1)]
    lines += ["", "nu  deg f_nu  dim C_nu"]
    lines += [f"{nu:<3} {f_nu_degree(ctx, nu):<9} {code_dimension(ctx, nu)}" for nu in range(top)]
    print("\n".join(lines))
    return 0


def cmd_genmatrix(args) -> int:
    ctx = _context(args)
    if args.nu is None:
        raise UsageError("--nu is required")
    if not (0 <= args.nu <= ctx.top - 1):
        raise UsageError(f"--nu must lie in [0, {ctx.top - 1}]")
    _emit(dumps(genmatrix_payload(ctx, args.nu), args.format), args.out)
    return 0


def cmd_radical(args) -> int:
    ctx = _context(args)
    if args.t is None:
        raise UsageError("--t is required")
    if not (0 <= args.t <= ctx.top):
        raise UsageError(f"--t must lie in [0, {ctx.top}]")
    _emit(dumps(radical_payload(ctx, args.t), args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    _validate(args)
    h = None
    if args.corrupt_h:
        # perturb h by p^(r-1) in the constant term: still monic, no longer a valid lift
        base = build_context(args.p, args.r, args.m, fbar=args.fbar)
        h = list(base.ring.h)
        h[0] = (h[0] + args.p ** (args.r - 1)) % base.q
    try:
        ctx = build_context(args.p, args.r, args.m, ordering=args.ordering, fbar=None if h else args.fbar,
                            h=h, ext_modulus=args.ext_modulus, gamma=args.gamma, check=h is None)
    except GrmError as exc:
        if h is None:
            raise
        print(f"FAIL setup: {exc}", file=sys.stderr)
        return 1
    results = run_all(ctx, seed=args.seed, samples=args.samples, max_oracle=args.max_dim)
    failed = [r for r in results if not r.ok]
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.identity}")
    for r in failed:
        print(f"FAIL {r.name}: {r.identity} {r.detail}".rstrip(), file=sys.stderr)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_example16(args) -> int:
    lines, elapsed = reproduce_length16()
    for line in lines:
        status = "PASS" if line.ok else "FAIL"
        print(f"{status} {line.label}: expected {line.expected}, got {line.got}")
    print(f"elapsed {elapsed:.3f} s")
    return 0 if all(line.ok for line in lines) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois-grm",
        description="Galois rings, their modular group algebras and Generalized Reed-Muller codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="parameter summary, N(t), deg f_nu, dim C_nu")
    _add_params(sp)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("genmatrix", help="generator matrix K_nu of C_nu")
    _add_params(sp)
    sp.add_argument("--nu", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_genmatrix)

    sp = sub.add_parser("radical", help="Jennings basis of M^t")
    _add_params(sp)
    sp.add_argument("--t", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_radical)

    sp = sub.add_parser("verify", help="run every identity check for the parameters")
    _add_params(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=1000, help="random samples per randomised check")
    sp.add_argument("--max-dim", type=int, default=81, help="largest q^m for the oracle checks")
    sp.add_argument("--corrupt-h", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("example16", help="reproduce the length-16 codes over F_4")
    sp.set_defaults(func=cmd_example16)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GrmError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
