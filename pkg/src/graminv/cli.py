"""Command-line interface.

Results go to stdout as ``key: value`` lines followed by one ``verdict:``
line; diagnostics go to stderr.  Exit codes: 0 the computation succeeded,
1 a negative verdict (not invariant, not in the kernel, dependent),
2 usage or syntax errors.  Every command is deterministic given its flags
and input files, including the seeded ones.
"""

from __future__ import annotations

import argparse
import sys

from .errors import GraminvError, NotInKernel, NotInvariantError, ParseError
from .group import sample_isometry
from .invariance import (
    IsometryWitness,
    LieAlgebraWitness,
    check_invariant,
    randomized_invariance_check,
)
from .linalg import Matrix
from .metric import (
    GramContext,
    Signature,
    gram_jacobian_rank,
    gram_polynomial,
    independence_rank,
    minor_polynomial,
)
from .poly import Polynomial, xvar
from .rewrite import enumerate_minors, kernel_test, membership_certificate, normal_form, rewrite_invariant
from .textio import format_polynomial, parse_polynomial, parse_rational_token


def _signature(text: str) -> Signature:
    try:
        p, q = (int(part) for part in text.split(","))
        return Signature(p, q)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected 'p,q', got {text!r}")


def _index_pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(part) for part in text.split(","))
        return i, j
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected 'i,j', got {text!r}")


def _emit(key: str, value) -> None:
    print(f"{key}: {value}")


def _verdict(text: str, code: int) -> int:
    print(f"verdict: {text}")
    return code


def _matrix_text(matrix: Matrix) -> str:
    rows = ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in matrix)
    return f"[{rows}]"


def _minor_key(rows, cols) -> str:
    return "[(" + ",".join(map(str, rows)) + "),(" + ",".join(map(str, cols)) + ")]"


def _read_polynomial(args) -> Polynomial:
    if args.poly is not None:
        with open(args.poly, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    return parse_polynomial(text)


def _read_point(path: str, ctx: GramContext) -> dict:
    n = ctx.signature.dimension
    with open(path, "r", encoding="utf-8") as handle:
        rows = [line.split() for line in handle if line.strip()]
    if len(rows) != ctx.vectors or any(len(row) != n for row in rows):
        raise GraminvError(f"point file must have {ctx.vectors} rows of {n} rationals")
    point = {}
    for k, row in enumerate(rows, start=1):
        for a, token in enumerate(row, start=1):
            point[xvar(k, a)] = parse_rational_token(token)
    return point


def _context(args) -> GramContext:
    return GramContext(args.sig, args.vectors)


def _emit_witness(witness) -> None:
    if isinstance(witness, LieAlgebraWitness):
        _emit("witness-kind", "lie-algebra")
        _emit("witness-matrix", _matrix_text(witness.element.matrix))
        _emit("witness-derivative", format_polynomial(witness.derivative))
    elif isinstance(witness, IsometryWitness):
        _emit("witness-kind", "isometry")
        _emit("witness-matrix", _matrix_text(witness.isometry.matrix))
        _emit("witness-difference", format_polynomial(witness.difference))


def _cmd_gram(args) -> int:
    ctx = _context(args)
    i, j = args.pair
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    _emit("pair", f"({i},{j})")
    _emit("polynomial", format_polynomial(gram_polynomial(ctx, i, j)))
    return _verdict("ok", 0)


def _cmd_minors(args) -> int:
    ctx = _context(args)
    n = ctx.signature.dimension
    minors = enumerate_minors(n, ctx.vectors)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    _emit("minor-count", len(minors))
    for rows, cols in minors:
        _emit(f"minor{_minor_key(rows, cols)}", format_polynomial(minor_polynomial(rows, cols)))
    return _verdict("ok", 0)


def _cmd_check(args) -> int:
    ctx = _context(args)
    f = _read_polynomial(args)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    if args.random:
        _emit("mode", "randomized")
        _emit("trials", args.trials)
        _emit("seed", args.seed)
        verdict = randomized_invariance_check(ctx, f, args.trials, args.seed, args.magnitude)
        if verdict.invariant:
            return _verdict("invariant (probabilistic)", 0)
    else:
        _emit("mode", "exact")
        verdict = check_invariant(ctx, f)
        if verdict.invariant:
            return _verdict("invariant", 0)
    _emit_witness(verdict.witness)
    return _verdict("not-invariant", 1)


def _cmd_rewrite(args) -> int:
    ctx = _context(args)
    f = _read_polynomial(args)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    try:
        rewritten = rewrite_invariant(ctx, f)
    except NotInvariantError as err:
        _emit_witness(err.witness)
        return _verdict("not-invariant", 1)
    _emit("rewritten", format_polynomial(rewritten))
    return _verdict("invariant", 0)


def _cmd_kernel(args) -> int:
    ctx = _context(args)
    f = _read_polynomial(args)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    if kernel_test(ctx, f):
        _emit("in-kernel", "true")
        return _verdict("in-kernel", 0)
    _emit("in-kernel", "false")
    return _verdict("not-in-kernel", 1)


def _cmd_certify(args) -> int:
    ctx = _context(args)
    f = _read_polynomial(args)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    try:
        certificate = membership_certificate(ctx, f)
    except NotInKernel:
        return _verdict("not-in-kernel", 1)
    _emit("cofactor-count", len(certificate.combination))
    for (rows, cols), cofactor in sorted(certificate.combination.items()):
        _emit(f"cofactor{_minor_key(rows, cols)}", format_polynomial(cofactor))
    return _verdict("in-kernel", 0)


def _cmd_normal_form(args) -> int:
    ctx = _context(args)
    f = _read_polynomial(args)
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    result = normal_form(ctx, f)
    _emit("representative", format_polynomial(result.representative))
    return _verdict("ok", 0)


def _cmd_independence(args) -> int:
    ctx = _context(args)
    expected = ctx.vectors * (ctx.vectors + 1) // 2
    _emit("signature", ctx.signature)
    _emit("vectors", ctx.vectors)
    if args.point is not None:
        rank = gram_jacobian_rank(ctx, _read_point(args.point, ctx))
    else:
        rank = independence_rank(ctx, args.seed)
    _emit("rank", rank)
    _emit("expected", expected)
    if rank == expected:
        return _verdict("independent", 0)
    return _verdict("dependent", 1)


def _cmd_sample(args) -> int:
    iso = sample_isometry(args.sig, args.seed, args.magnitude)
    for row in iso.matrix:
        print(" ".join(str(v) for v in row))
    return _verdict("ok", 0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graminv",
        description="Exact invariant computations for isometry groups of (p,q) metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vectors=True, poly=False):
        p.add_argument("--sig", type=_signature, required=True, metavar="p,q",
                       help="metric signature as two comma-separated counts")
        if vectors:
            p.add_argument("--vectors", type=int, required=True, metavar="m",
                           help="number of argument vectors")
        if poly:
            p.add_argument("--poly", metavar="FILE",
                           help="polynomial file (default: read stdin)")

    p = sub.add_parser("gram", help="print one Gram pairing polynomial")
    common(p)
    p.add_argument("--pair", type=_index_pair, required=True, metavar="i,j")
    p.set_defaults(handler=_cmd_gram)

    p = sub.add_parser("minors", help="enumerate the relation minors")
    common(p)
    p.set_defaults(handler=_cmd_minors)

    p = sub.add_parser("check", help="decide invariance of a polynomial")
    common(p, poly=True)
    p.add_argument("--random", action="store_true", help="use the randomized one-sided check")
    p.add_argument("--trials", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--magnitude", type=int, default=5, metavar="R")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("rewrite", help="express an invariant in pairing symbols")
    common(p, poly=True)
    p.set_defaults(handler=_cmd_rewrite)

    p = sub.add_parser("kernel", help="test whether a Y-polynomial is a relation")
    common(p, poly=True)
    p.set_defaults(handler=_cmd_kernel)

    p = sub.add_parser("certify", help="write a relation as a combination of minors")
    common(p, poly=True)
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("normal-form", help="canonical representative modulo the minors")
    common(p, poly=True)
    p.set_defaults(handler=_cmd_normal_form)

    p = sub.add_parser("independence", help="Jacobian rank of the pairings at a point")
    common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--point", metavar="FILE", help="rational point, one row per vector")
    group.add_argument("--seed", type=int, default=0, metavar="S")
    p.set_defaults(handler=_cmd_independence)

    p = sub.add_parser("sample", help="one seeded pseudo-random rational isometry")
    common(p, vectors=False)
    p.add_argument("--seed", type=int, required=True, metavar="S")
    p.add_argument("--magnitude", type=int, required=True, metavar="R")
    p.set_defaults(handler=_cmd_sample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as err:
        print(f"syntax error: {err}", file=sys.stderr)
        return 2
    except GraminvError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
