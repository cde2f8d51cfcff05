"""Regenerate src/eulersums/data/known_reductions.txt.

Linear sums S(p;q) of weight 3..10 (and a few quadratic sums used as seeds) are
matched against a basis of zeta products by integer-relation search at high
precision, then checked again at a second precision before being written out.
Entries for S(1;k) come from the closed formula for that family, the two
Li_k(1/2) entries are the classical closed forms.  The package itself never
searches for relations; it only re-certifies the file when loading it.

    python3 scripts/derive_known_table.py [--dps 90]
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

import mpmath

from eulersums.grammar import parse_expr
from eulersums.identities import euler_linear_sum
from eulersums.numerics import PrecisionContext
from eulersums.sums import SumSignature
from eulersums.symbolic import Expression, canonical, expr_eval, render

OUT = Path(__file__).resolve().parents[1] / "src" / "eulersums" / "data" / "known_reductions.txt"

# linear sums left as basis atoms at even weight
ATOMIC = {"S(2;6)", "S(2;8)"}

# quadratic sums whose reductions are classical inputs rather than consequences of the generated relations
QUADRATIC_SEEDS = (
    "S(1,2;3)", "S(1,2;5)", "S(1,2;7)",  # H_n zeta_n(2) / n^odd
    "S(1,2;4)", "S(1,3;3)", "S(1,2;6)", "S(1,3;5)", "S(1,4;4)",  # odd weight with H_n
    "S(2,2;4)", "S(2,2;6)", "S(2,5;3)", "S(2,4;4)",  # zeta_n(2) zeta_n(p+2m) / n^p and the mirror
)

LI_HALF = {
    2: "1/2*z2 - 1/2*ln2^2",
    3: "7/8*z3 - 1/2*z2*ln2 + 1/6*ln2^3",
}


def zeta_monomials(w: int, max_factors: int = 3) -> list[Expression]:
    """Products of zeta values of total weight w, at most one of them even."""
    out = []
    seen = set()

    def rec(rest, smallest, parts):
        if rest == 0:
            if sum(1 for p in parts if p % 2 == 0) <= 1:
                key = tuple(parts)
                if key not in seen:
                    seen.add(key)
                    e = Expression.constant(1)
                    for p in parts:
                        e = e * Expression.zeta(p)
                    out.append(e)
            return
        if len(parts) == max_factors:
            return
        for k in range(smallest, rest + 1):
            rec(rest - k, k, parts + [k])

    rec(w, 2, [])
    return out


def basis(w: int, linear: bool) -> list[Expression]:
    if linear:
        if w % 2:
            return [Expression.zeta(w)] + [
                Expression.zeta(a) * Expression.zeta(w - a) for a in range(2, w - 2, 2)
            ]
        out = [Expression.zeta(w)] + [
            Expression.zeta(a) * Expression.zeta(w - a) for a in range(3, w // 2 + 1, 2)
        ]
        if w >= 8:
            out.append(parse_expr(f"S(2;{w - 2})"))
        return out
    out = zeta_monomials(w)
    for atom_w, text in ((6 + 2, "S(2;6)"), (8 + 2, "S(2;8)")):
        if atom_w == w:
            out.append(parse_expr(text))
        elif atom_w < w:
            out.extend(parse_expr(text) * m for m in zeta_monomials(w - atom_w, 1))
    return out


def alternating_basis(w: int) -> list[Expression]:
    """Products of ln 2, zeta values and Li_k(1/2) (4 <= k <= 6) of weight w."""
    out = []
    for k in range(w + 1):
        rest = w - k
        ln = Expression.ln2() ** k
        pieces = [Expression.constant(1)] if rest == 0 else zeta_monomials(rest)
        if rest in (4, 5, 6):
            pieces = pieces + [parse_expr(f"Li{rest}(1/2)")]
        if rest == 6:
            pieces = pieces + [parse_expr("z2*Li4(1/2)")]
        out.extend(ln * piece for piece in pieces)
    return out


def reflected(sig: SumSignature) -> SumSignature | None:
    (p, pa), = sig.inner
    a = -p if pa else p
    b = -sig.outer_exponent if sig.outer_alternating else sig.outer_exponent
    if a == 1:
        return None
    return SumSignature.of(b, a)


def alternating_linear(w: int) -> list[SumSignature]:
    out = []
    for p in range(1, w):
        q = w - p
        for bp in (1, -1):
            for bq in (1, -1):
                if bp == 1 and bq == 1:
                    continue
                if q == 1 and bq == 1:
                    continue
                out.append(SumSignature.of(bp * p, bq * q))
    return out


def find_reduction(target: Expression, terms: list[Expression], dps: int) -> Expression:
    ctx = PrecisionContext(target_digits=dps)
    vals = [expr_eval(target, ctx).value] + [expr_eval(t, ctx).value for t in terms]
    with mpmath.workdps(dps - 10):
        rel = mpmath.pslq(vals, maxcoeff=10**7, maxsteps=10**6)
    if rel is None or rel[0] == 0:
        raise RuntimeError(f"no relation found for {render(target)}")
    out = Expression.zero()
    for c, t in zip(rel[1:], terms):
        out = out + t * Fraction(-c, rel[0])
    return canonical(out)


def check(target: Expression, value: Expression, dps: int) -> mpmath.mpf:
    ctx = PrecisionContext(target_digits=dps)
    r = expr_eval(target - value, ctx)
    return abs(r.value) + r.abs_error_bound


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dps", type=int, default=90)
    args = ap.parse_args(argv)
    lines = [
        "# Certified reductions, one per line: SIGNATURE := EXPRESSION  # provenance",
        "# Regenerate with scripts/derive_known_table.py; every entry is re-checked numerically on load.",
    ]
    for k in range(2, 10):
        ident = euler_linear_sum(k)
        lines.append(f"{ident.lhs} := {render(canonical(ident.rhs))}  # paper-equation")
    for w in range(4, 11):
        for p in range(2, w - 1):
            sig = SumSignature.of(p, w - p)
            if str(sig) in ATOMIC:
                continue
            target = Expression.sum_of(sig)
            red = find_reduction(target, basis(w, linear=True), args.dps)
            err = check(target, red, args.dps + 20)
            if err > mpmath.mpf(10) ** (-args.dps + 15):
                raise RuntimeError(f"{sig}: second check failed ({err})")
            lines.append(f"{sig} := {render(red)}  # classical-derived")
            print(lines[-1], file=sys.stderr)
    for w in range(2, 6):
        for sig in alternating_linear(w):
            target = Expression.sum_of(sig)
            red = find_reduction(target, alternating_basis(w), args.dps)
            err = check(target, red, args.dps + 20)
            if err > mpmath.mpf(10) ** (-args.dps + 15):
                raise RuntimeError(f"{sig}: second check failed ({err})")
            lines.append(f"{sig} := {render(red)}  # classical-derived")
            print(lines[-1], file=sys.stderr)
    # weight 6: only some alternating linear sums reduce; the rest are tied to
    # their mirror image S(q;p) by the reflection formula, keeping the smaller name
    leftover = []
    for sig in alternating_linear(6):
        target = Expression.sum_of(sig)
        try:
            red = find_reduction(target, alternating_basis(6), args.dps)
        except RuntimeError:
            leftover.append(sig)
            continue
        if check(target, red, args.dps + 20) > mpmath.mpf(10) ** (-args.dps + 15):
            leftover.append(sig)
            continue
        lines.append(f"{sig} := {render(red)}  # classical-derived")
        print(lines[-1], file=sys.stderr)
    names = {str(s) for s in leftover}
    for sig in leftover:
        mirror = reflected(sig)
        if mirror is None or str(mirror) not in names or str(mirror) > str(sig):
            continue
        target = Expression.sum_of(sig)
        terms = [Expression.sum_of(mirror)] + zeta_monomials(6) + [Expression.ln2() * Expression.zeta(5)]
        red = find_reduction(target, terms, args.dps)
        if check(target, red, args.dps + 20) > mpmath.mpf(10) ** (-args.dps + 15):
            raise RuntimeError(f"{sig}: reflection check failed")
        lines.append(f"{sig} := {render(red)}  # classical-derived")
        print(lines[-1], file=sys.stderr)
    for k, text in LI_HALF.items():
        lines.append(f"Li{k}(1/2) := {text}  # classical-derived")
    for text in QUADRATIC_SEEDS:
        target = parse_expr(text)
        w = next(iter(target.weights()))
        red = find_reduction(target, basis(w, linear=False), args.dps)
        err = check(target, red, args.dps + 20)
        if err > mpmath.mpf(10) ** (-args.dps + 15):
            raise RuntimeError(f"{text}: second check failed ({err})")
        lines.append(f"{text} := {render(red)}  # classical-derived")
        print(lines[-1], file=sys.stderr)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines) - 2} entries to {OUT}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
