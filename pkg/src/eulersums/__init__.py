"""High-precision evaluation, exact reduction and verification of Euler sums."""
from __future__ import annotations

from .exact import bernoulli, zeta_even_closed
from .grammar import ParseError, parse_equation, parse_expr, parse_signature
from .harness import VerificationReport, verify_examples, verify_identity_grid, verify_kernels, verify_table1
from .identities import GENERATORS, Identity, generator_cells, grid_identities
from .numerics import DomainError, NumericalResult, PrecisionContext, PrecisionUnreachable, zeta_value
from .solver import InconsistentSystemError, RelationSystem, SolveResult, reduce_expression, solve_closed_forms
from .sums import DivergentSum, SumSignature, euler_sum_value
from .symbolic import Atom, Expression, Monomial, canonical, expr_eval, normalize, render
from .table import KnownReductionTable, TableCertificationError, default_table

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "DivergentSum",
    "DomainError",
    "Expression",
    "GENERATORS",
    "Identity",
    "InconsistentSystemError",
    "KnownReductionTable",
    "Monomial",
    "NumericalResult",
    "ParseError",
    "PrecisionContext",
    "PrecisionUnreachable",
    "RelationSystem",
    "SolveResult",
    "SumSignature",
    "TableCertificationError",
    "VerificationReport",
    "bernoulli",
    "canonical",
    "default_table",
    "euler_sum_value",
    "expr_eval",
    "generator_cells",
    "grid_identities",
    "normalize",
    "parse_equation",
    "parse_expr",
    "parse_signature",
    "reduce_expression",
    "render",
    "solve_closed_forms",
    "verify_examples",
    "verify_identity_grid",
    "verify_kernels",
    "verify_table1",
    "zeta_even_closed",
    "zeta_value",
]
