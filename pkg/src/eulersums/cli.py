"""Command-line front end: ``eulersums VERB [ARGS] [--digits N --max-terms M --guard G]``.

Exit status is 0 when every executed check passed, 1 when a check failed and 2
for malformed input.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from mpmath import mpf

from .grammar import ParseError, parse_equation, parse_expr
from .harness import (
    CheckRecord,
    VerificationReport,
    default_tolerance,
    verify_examples,
    verify_identity_grid,
    verify_table1,
)
from .identities import GENERATORS
from .numerics import DomainError, PrecisionContext, PrecisionUnreachable
from .solver import InconsistentSystemError, reduce_expression
from .symbolic import expr_eval, render
from .table import TableCertificationError, default_table

__all__ = ["ParsedCommand", "build_parser", "parse_command", "run", "main"]

VERBS = ("eval", "reduce", "verify", "table1", "examples", "grid", "list-identities")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class ParsedCommand:
    verb: str
    args: tuple[str, ...]
    ctx: PrecisionContext
    jsonl: bool = False
    workers: int | None = None
    generators: tuple[str, ...] | None = None
    p_range: tuple[int, int] = (2, 5)
    m_range: tuple[int, int] = (0, 2)
    tolerance: mpf | None = None


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=30, help="target decimal digits (default 30)")
    common.add_argument("--max-terms", type=int, default=10**6, help="term budget per series (default 10^6)")
    common.add_argument("--guard", type=int, default=10, help="guard digits (default 10)")
    common.add_argument("--jsonl", action="store_true", help="print one JSON record per check instead of text")
    common.add_argument("--workers", type=int, default=None, help="worker processes for batch checks")

    ap = argparse.ArgumentParser(prog="eulersums", description="Evaluate, reduce and verify Euler sums.")
    sub = ap.add_subparsers(dest="verb", required=True, metavar="VERB")
    p = sub.add_parser("eval", parents=[common], help="value of an expression with its certified digits")
    p.add_argument("expr")
    p = sub.add_parser("reduce", parents=[common], help="closed form of an expression in the known basis")
    p.add_argument("expr")
    p = sub.add_parser("verify", parents=[common], help="check 'lhs == rhs' numerically; reads stdin without arguments")
    p.add_argument("equations", nargs="*")
    p.add_argument("--tolerance", type=float, default=None, help="residual tolerance (default 10^-(digits-5))")
    sub.add_parser("table1", parents=[common], help="reference values of 17 quadratic sums")
    sub.add_parser("examples", parents=[common], help="published closed forms and combinations")
    p = sub.add_parser("grid", parents=[common], help="identity residuals over a (p, m) grid")
    p.add_argument("--generator", action="append", dest="generators", choices=sorted(GENERATORS), metavar="NAME")
    p.add_argument("--p-range", type=_int_range, default=(2, 5), metavar="LO:HI")
    p.add_argument("--m-range", type=_int_range, default=(0, 2), metavar="LO:HI")
    p.add_argument("--tolerance", type=float, default=None)
    sub.add_parser("list-identities", parents=[common], help="available identity generators")
    return ap


def parse_command(argv: Sequence[str]) -> ParsedCommand:
    ns = build_parser().parse_args(list(argv))
    try:
        ctx = PrecisionContext(target_digits=ns.digits, guard_digits=ns.guard, max_terms=ns.max_terms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    args: tuple[str, ...] = ()
    if ns.verb in ("eval", "reduce"):
        args = (ns.expr,)
    elif ns.verb == "verify":
        args = tuple(ns.equations)
    tol = getattr(ns, "tolerance", None)
    return ParsedCommand(
        verb=ns.verb, args=args, ctx=ctx, jsonl=ns.jsonl, workers=ns.workers,
        generators=tuple(ns.generators) if getattr(ns, "generators", None) else None,
        p_range=getattr(ns, "p_range", (2, 5)), m_range=getattr(ns, "m_range", (0, 2)),
        tolerance=mpf(tol) if tol is not None else None,
    )


def _emit_report(report: VerificationReport, cmd: ParsedCommand, out: TextIO) -> int:
    if cmd.jsonl:
        out.write(report.jsonl())
    else:
        for r in report:
            _emit_text(r, out)
        out.write(report.summary() + "\n")
    return 0 if report.ok else 1


def _emit_text(r: CheckRecord, out: TextIO) -> None:
    if r.kind == "structural":
        out.write(f"{r.verdict.upper():4s} {r.id}  {r.detail}\n")
    else:
        out.write(f"{r.verdict.upper():4s} {r.id}  residual {r.residual}  bound {r.bound}  tolerance {r.tolerance}\n")


def _verify_lines(cmd: ParsedCommand, lines: Sequence[str], out: TextIO) -> int:
    tol = cmd.tolerance if cmd.tolerance is not None else default_tolerance(cmd.ctx)
    report = VerificationReport("verify")
    for n, text in enumerate(lines, 1):
        lhs, rhs = parse_equation(text)
        res = expr_eval(lhs - rhs, cmd.ctx)
        total = abs(res.value) + res.bound
        report.records.append(CheckRecord(
            f"verify/{n}", text.strip(), "numeric", "pass" if total <= tol else "fail",
            residual=f"{float(res.value):.3e}", bound=f"{float(res.bound):.3e}", tolerance=f"{float(tol):.1e}",
        ))
    return _emit_report(report, cmd, out)


def run(cmd: ParsedCommand, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    if cmd.verb == "eval":
        res = expr_eval(parse_expr(cmd.args[0]), cmd.ctx)
        digits = res.digits()
        out.write(f"{res.format(cmd.ctx.target_digits)}\n")
        out.write(f"certified digits: {min(digits, cmd.ctx.target_digits)}  (bound {float(res.bound):.2e})\n")
        return 0
    if cmd.verb == "reduce":
        reduced, result = reduce_expression(parse_expr(cmd.args[0]), default_table())
        out.write(render(reduced) + "\n")
        return 0
    if cmd.verb == "verify":
        lines = list(cmd.args)
        if not lines:
            lines = [ln for ln in stdin.read().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        return _verify_lines(cmd, lines, out)
    if cmd.verb == "table1":
        return _emit_report(verify_table1(cmd.ctx, workers=cmd.workers), cmd, out)
    if cmd.verb == "examples":
        return _emit_report(verify_examples(cmd.ctx, workers=cmd.workers), cmd, out)
    if cmd.verb == "grid":
        lo, hi = cmd.p_range
        mlo, mhi = cmd.m_range
        report = verify_identity_grid(cmd.generators, range(lo, hi + 1), range(mlo, mhi + 1), cmd.ctx,
                                      cmd.tolerance, cmd.workers)
        return _emit_report(report, cmd, out)
    if cmd.verb == "list-identities":
        width = max(map(len, GENERATORS))
        for name, text in GENERATORS.items():
            out.write(f"{name:{width}s}  {text}\n")
        return 0
    raise UsageError(f"unknown verb {cmd.verb!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_command(argv)
    except UsageError as exc:
        print(f"eulersums: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cmd)
    except (ParseError, DomainError) as exc:
        print(f"eulersums: {exc}", file=sys.stderr)
        return 2
    except (PrecisionUnreachable, InconsistentSystemError, TableCertificationError) as exc:
        print(f"eulersums: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
