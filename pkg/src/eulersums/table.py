"""Known reductions of linear sums, seed quadratic sums and Li_k(1/2), certified on load."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from mpmath import mpf

from .grammar import ParseError, parse_expr
from .numerics import PrecisionContext
from .symbolic import Atom, Expression, canonical, expr_eval, render

__all__ = [
    "TableEntry",
    "TableCertificationError",
    "KnownReductionTable",
    "default_table",
    "CERTIFY_TOLERANCE",
]

CERTIFY_TOLERANCE = mpf(10) ** -20
PROVENANCE = ("paper-equation", "classical-derived")


class TableCertificationError(ValueError):
    """An entry failed to parse or its numerical check; ``entry`` names it."""

    def __init__(self, entry: str, reason: str):
        self.entry = entry
        super().__init__(f"known-reduction entry {entry} rejected: {reason}")


@dataclass(frozen=True)
class TableEntry:
    key: Atom
    value: Expression
    provenance: str
    residual: mpf | None = None
    bound: mpf | None = None
    digits: int | None = None

    def line(self) -> str:
        return f"{self.key} := {render(self.value)}  # {self.provenance}"


def _parse_line(line: str, lineno: int) -> tuple[Atom, Expression, str] | None:
    body, _, comment = line.partition("#")
    body = body.strip()
    if not body:
        return None
    name = body.split(":=", 1)[0].strip() or f"line {lineno}"
    if ":=" not in body:
        raise TableCertificationError(name, f"line {lineno} lacks ':='")
    lhs, rhs = (s.strip() for s in body.split(":=", 1))
    provenance = comment.strip()
    if provenance not in PROVENANCE:
        raise TableCertificationError(name, f"unknown provenance {provenance!r}")
    try:
        key_expr = parse_expr(lhs)
        value = parse_expr(rhs)
    except ParseError as exc:
        raise TableCertificationError(name, str(exc)) from None
    atoms = key_expr.atoms()
    if len(key_expr.terms) != 1 or len(atoms) != 1 or key_expr.terms[0][1] != 1:
        raise TableCertificationError(name, "left side must be a single sum or Li_k(1/2)")
    key = next(iter(atoms))
    if key.kind not in ("sum", "lihalf") or str(Expression.atom(key)) != str(key_expr):
        raise TableCertificationError(name, "left side must be a single sum or Li_k(1/2)")
    return key, value, provenance


class KnownReductionTable:
    """Atom -> certified closed form.

    Construction parses every line and evaluates ``key - value`` at
    ``ctx``; any entry whose residual plus bound exceeds ``tolerance`` aborts
    loading with the entry named.
    """

    def __init__(self, text: str, ctx: PrecisionContext | None = None, tolerance: mpf = CERTIFY_TOLERANCE,
                 certify: bool = True):
        self.ctx = ctx or PrecisionContext(target_digits=25)
        self.tolerance = tolerance
        self._lock = threading.Lock()
        self.entries: dict[Atom, TableEntry] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            parsed = _parse_line(line, lineno)
            if parsed is None:
                continue
            key, value, provenance = parsed
            if key in self.entries:
                raise TableCertificationError(str(key), "duplicate entry")
            self.entries[key] = TableEntry(key, value, provenance)
        if certify:
            self.certify()

    @classmethod
    def from_path(cls, path: str | Path, **kw) -> "KnownReductionTable":
        return cls(Path(path).read_text(encoding="utf-8"), **kw)

    def certify(self) -> None:
        with self._lock:
            for key, entry in list(self.entries.items()):
                res = expr_eval(Expression.atom(key) - entry.value, self.ctx)
                total = abs(res.value) + res.abs_error_bound
                if not total <= self.tolerance:
                    raise TableCertificationError(
                        str(key), f"residual {float(res.value):.3e} (bound {float(res.abs_error_bound):.3e})"
                        f" exceeds {float(self.tolerance):.0e}"
                    )
                self.entries[key] = TableEntry(
                    key, entry.value, entry.provenance, abs(res.value), res.abs_error_bound, self.ctx.target_digits
                )

    def __contains__(self, key: Atom) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: Atom) -> Expression:
        return self.entries[key].value

    def mapping(self) -> dict[Atom, Expression]:
        return {k: e.value for k, e in self.entries.items()}

    def substitute(self, e: Expression) -> Expression:
        """Replace every table atom until none is left, then canonicalize."""
        mapping = self.mapping()
        for _ in range(8):
            if not (e.atoms() & mapping.keys()):
                break
            e = e.substitute(mapping)
        return canonical(e)

    __call__ = substitute

    def dump(self) -> str:
        return "\n".join(e.line() for e in self.entries.values()) + "\n"


_DEFAULT: KnownReductionTable | None = None
_DEFAULT_LOCK = threading.Lock()


def default_table_text() -> str:
    return resources.files("eulersums").joinpath("data/known_reductions.txt").read_text(encoding="utf-8")


def default_table() -> KnownReductionTable:
    """The packaged table, certified once per process."""
    global _DEFAULT
    with _DEFAULT_LOCK:
        if _DEFAULT is None:
            _DEFAULT = KnownReductionTable(default_table_text())
        return _DEFAULT
