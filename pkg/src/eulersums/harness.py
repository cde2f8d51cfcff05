"""Batch verification with deterministic, machine-readable reports.

A numeric check passes only when ``|residual| + bound <= tolerance``: the
certified bound, not the point estimate, decides.  Structural checks compare
exact expressions after reduction and have no numeric bound.
"""
from __future__ import annotations

import json
import os
import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mp, mpf

from .grammar import parse_expr, parse_signature
from .identities import GENERATORS, Identity, generator_cells, printed_combinations, weight_six_alternating
from .numerics import NumericalResult, PrecisionContext
from .reference import EXACT_TARGETS, QUADRATIC_CLOSED_FORMS, TABLE_ONE
from .solver import reduce_expression
from .sums import euler_sum_value, kernel_integral_residual, log_moment_polylog_residual, log_moment_residual
from .symbolic import Expression, canonical, expr_eval, render
from .table import KnownReductionTable, default_table

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "verify_table1",
    "verify_examples",
    "verify_identity_grid",
    "verify_kernels",
    "KERNEL_TOLERANCE",
    "structural_difference",
    "default_tolerance",
]

PASS, FAIL, SKIP = "pass", "fail", "skip"


def default_tolerance(ctx: PrecisionContext) -> mpf:
    """Residual tolerance that leaves five digits of headroom below the target."""
    return mpf(10) ** -(ctx.target_digits - 5)


def _fmt(x: mpf | None, digits: int = 6) -> str:
    if x is None:
        return ""
    return mpmath.nstr(x, digits)


@dataclass(frozen=True)
class CheckRecord:
    id: str
    anchor: str
    kind: str  # numeric | structural
    verdict: str
    value: str = ""
    residual: str = ""
    bound: str = ""
    tolerance: str = ""
    detail: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        if timing:
            d["elapsed"] = round(self.elapsed, 4)
        else:
            del d["elapsed"]
        return json.dumps(d, sort_keys=True, ensure_ascii=True)


@dataclass
class VerificationReport:
    name: str
    records: list[CheckRecord] = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def extend(self, other: "VerificationReport | Iterable[CheckRecord]") -> "VerificationReport":
        self.records.extend(other)
        return self

    def count(self, verdict: str) -> int:
        return sum(1 for r in self.records if r.verdict == verdict)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def jsonl(self, timing: bool = True) -> str:
        return "".join(r.to_json(timing) + "\n" for r in self.records)

    def summary(self) -> str:
        lines = [
            f"{self.name}: {self.count(PASS)} passed, {self.count(FAIL)} failed, "
            f"{self.count(SKIP)} skipped, {len(self.records)} checks"
        ]
        for r in self.failures():
            lines.append(f"  FAIL {r.id}: residual {r.residual} bound {r.bound} tolerance {r.tolerance} {r.detail}".rstrip())
        return "\n".join(lines)


# ------------------------------------------------------------ numeric checks
#
# Every numeric check is a module-level function plus picklable arguments so the
# pool can ship it to a worker; results come back in submission order.


@dataclass(frozen=True)
class _Job:
    id: str
    anchor: str
    fn: Callable
    args: tuple
    tolerance: mpf
    detail: str = ""


def _residual_of_identity(ident: Identity, ctx: PrecisionContext) -> tuple[NumericalResult, NumericalResult | None]:
    return ident.residual(ctx), None


def _residual_of_texts(lhs: str, rhs: str, ctx: PrecisionContext) -> tuple[NumericalResult, NumericalResult | None]:
    left = expr_eval(parse_expr(lhs), ctx)
    return left - expr_eval(parse_expr(rhs), ctx), left


def _residual_of_call(fn: Callable, args: tuple, ctx: PrecisionContext) -> tuple[NumericalResult, NumericalResult | None]:
    return fn(*args, ctx), None


def _run_job(job: _Job, ctx: PrecisionContext) -> CheckRecord:
    t0 = time.perf_counter()
    try:
        res, value = job.fn(*job.args, ctx)
    except Exception as exc:  # a crash is a failed check, not a crashed report
        return CheckRecord(job.id, job.anchor, "numeric", FAIL, tolerance=_fmt(job.tolerance, 3),
                           detail=f"{job.detail} error: {type(exc).__name__}: {exc}".strip(),
                           elapsed=time.perf_counter() - t0)
    with mp.workprec(res.prec):
        total = abs(res.value) + res.bound
    verdict = PASS if total <= job.tolerance else FAIL
    return CheckRecord(
        job.id, job.anchor, "numeric", verdict,
        value=value.format(ctx.target_digits) if value is not None else "",
        residual=_fmt(res.value, 3), bound=_fmt(res.bound, 3), tolerance=_fmt(job.tolerance, 3),
        detail=job.detail, elapsed=time.perf_counter() - t0,
    )


def _default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def _run_jobs(jobs: Sequence[_Job], ctx: PrecisionContext, workers: int | None) -> list[CheckRecord]:
    workers = _default_workers() if workers is None else workers
    if workers <= 1 or len(jobs) < 2:
        return [_run_job(j, ctx) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_run_job, jobs, [ctx] * len(jobs), chunksize=max(1, len(jobs) // (4 * workers))))


# --------------------------------------------------------- structural checks


def structural_difference(lhs: Expression, rhs: Expression, table: KnownReductionTable | None = None) -> Expression:
    """lhs - rhs after table substitution and elimination; zero means the relations imply the identity.

    Sums the solver only pins down relative to other unknowns are substituted too,
    so a combination fixed by the relations still reduces to zero.
    """
    table = table if table is not None else default_table()
    diff, res = reduce_expression(lhs - rhs, table)
    if res.partial:
        diff = table(diff.substitute(res.partial))
    return canonical(diff)


def _structural_record(cid: str, anchor: str, lhs: Expression, rhs: Expression, table, required: bool) -> CheckRecord:
    t0 = time.perf_counter()
    diff = structural_difference(lhs, rhs, table)
    if diff.is_zero():
        verdict, detail = PASS, "reduces to 0"
    elif required:
        verdict, detail = FAIL, f"leaves {render(diff)}"
    else:
        verdict, detail = SKIP, f"relations do not determine it; left {render(diff)}"
    return CheckRecord(cid, anchor, "structural", verdict, detail=detail, elapsed=time.perf_counter() - t0)


def _exact_record(sig: str, printed: str, table) -> CheckRecord:
    """The reduced form must equal the printed one coefficient for coefficient."""
    t0 = time.perf_counter()
    got, _ = reduce_expression(parse_expr(sig), table)
    want = canonical(parse_expr(printed))
    verdict = PASS if got == want else FAIL
    return CheckRecord(f"examples/{sig}/exact", sig, "structural", verdict, value=render(got),
                       detail=f"expected {printed}", elapsed=time.perf_counter() - t0)


# ------------------------------------------------------------------ reports


def _digits_tolerance(reference: str, digits: int) -> mpf:
    """Half-open window allowing disagreement only after ``digits`` significant digits."""
    ref = mpf(reference)
    exponent = int(mpmath.floor(mpmath.log10(abs(ref))))
    return mpf(10) ** (exponent + 1 - digits)


def _digits_check(sig: str, reference: str, ctx: PrecisionContext) -> tuple[NumericalResult, NumericalResult]:
    value = euler_sum_value(parse_signature(sig), ctx)
    with mp.workprec(ctx.working_prec):
        return value - NumericalResult(mpf(reference), mpf(0), ctx.working_prec), value


def verify_table1(ctx: PrecisionContext | None = None, digits: int = 25, workers: int | None = None) -> VerificationReport:
    """The 17 reference rows: direct sums against both printed columns, and the closed forms against the sums."""
    ctx = ctx or PrecisionContext()
    if ctx.target_digits < digits:
        raise ValueError(f"table check needs at least {digits} target digits")
    jobs = []
    for sig, closed_col, approx_col in TABLE_ONE:
        for label, ref in (("approximation", approx_col), ("closed_column", closed_col)):
            jobs.append(_Job(f"table1/{sig}/{label}", sig, _digits_check, (sig, ref),
                             _digits_tolerance(ref, digits), f"first {digits} digits of {ref}"))
        if sig in QUADRATIC_CLOSED_FORMS:
            jobs.append(_Job(f"table1/{sig}/closed_form", sig, _residual_of_texts, (sig, QUADRATIC_CLOSED_FORMS[sig]),
                             default_tolerance(ctx), "direct sum minus closed form"))
    return VerificationReport("table1", _run_jobs(jobs, ctx, workers))


def verify_examples(ctx: PrecisionContext | None = None, table: KnownReductionTable | None = None,
                    workers: int | None = None) -> VerificationReport:
    """Published closed forms and combinations: re-derived exactly where possible, and summed numerically."""
    ctx = ctx or PrecisionContext()
    table = table if table is not None else default_table()
    tol = default_tolerance(ctx)
    structural: list[CheckRecord] = []
    jobs: list[_Job] = []
    for sig, printed in QUADRATIC_CLOSED_FORMS.items():
        if sig in EXACT_TARGETS:
            structural.append(_exact_record(sig, printed, table))
        else:
            structural.append(_structural_record(f"examples/{sig}/structural", sig, parse_expr(sig),
                                                 parse_expr(printed), table, required=False))
        jobs.append(_Job(f"examples/{sig}/numeric", sig, _residual_of_texts, (sig, printed), tol,
                         "direct sum minus closed form"))
    for ident in printed_combinations() + weight_six_alternating():
        structural.append(_structural_record(f"examples/{ident.id}/structural", ident.anchor, ident.lhs, ident.rhs,
                                             table, required=False))
        jobs.append(_Job(f"examples/{ident.id}/numeric", ident.anchor, _residual_of_identity, (ident,), tol))
    records = structural + _run_jobs(jobs, ctx, workers)
    records.sort(key=lambda r: r.id)
    return VerificationReport("examples", records)


def _cell_detail(ident: Identity) -> str:
    params = ", ".join(f"{k}={v}" for k, v in ident.params)
    return f"generator {ident.id.split('(')[0]}" + (f" at {params}" if params else "")


def verify_identity_grid(generators: Sequence[str] | None = None, p_range: Iterable[int] = range(2, 6),
                         m_range: Iterable[int] = range(0, 3), ctx: PrecisionContext | None = None,
                         tolerance: mpf | None = None, workers: int | None = None) -> VerificationReport:
    """Residual of every generator instance on the grid; each record names its generator and parameters."""
    ctx = ctx or PrecisionContext()
    tol = default_tolerance(ctx) if tolerance is None else tolerance
    names = list(GENERATORS) if generators is None else list(generators)
    for name in names:
        if name not in GENERATORS:
            raise KeyError(f"unknown generator {name!r}")
    p_range, m_range = list(p_range), list(m_range)
    jobs = []
    for name in names:
        for ident in generator_cells(name, p_range, m_range):
            jobs.append(_Job(f"grid/{ident.id}", ident.anchor, _residual_of_identity, (ident,), tol, _cell_detail(ident)))
    return VerificationReport("grid", _run_jobs(jobs, ctx, workers))


KERNEL_TOLERANCE = mpf(10) ** -15


def verify_kernels(ctx: PrecisionContext | None = None, tolerance: mpf = KERNEL_TOLERANCE,
                   workers: int | None = None) -> VerificationReport:
    """Closed forms of the polylog kernel integral and the log moments against quadrature."""
    ctx = ctx or PrecisionContext()
    jobs = []
    for n in (1, 2, 5):
        for p in (2, 3):
            for x in ("1/4", "1/2", "-1/2"):
                jobs.append(_Job(f"kernel/polylog(n={n},p={p},x={x})", "int_0^x t^(n-1) Li_p(t) dt",
                                 _residual_of_call, (kernel_integral_residual, (n, p, Fraction(x))), tolerance))
        for m in (1, 2):
            jobs.append(_Job(f"kernel/log_moment(n={n},m={m})", "int_0^1 x^(n-1) ln^m x ln(1-x) dx",
                             _residual_of_call, (log_moment_residual, (n, m)), tolerance))
            for p in (2, 3):
                jobs.append(_Job(f"kernel/log_moment_polylog(n={n},m={m},p={p})", "int_0^1 x^(n-1) ln^m x Li_p(x) dx",
                                 _residual_of_call, (log_moment_polylog_residual, (n, m, p)), tolerance))
    return VerificationReport("kernels", _run_jobs(jobs, ctx, workers))
