"""Enumerate the idempotents of Z_n through coprime splits of n."""

from .arith import (
    DomainError,
    Factorization,
    addmod,
    ext_gcd,
    factorize,
    is_prime,
    mulmod,
    submod,
)
from .engine import (
    IdempotentSet,
    InvariantError,
    MethodReport,
    Split,
    SplitSolution,
    all_idempotents_prop51,
    all_idempotents_prop52,
    all_idempotents_prop53,
    enumerate_splits,
    h_plus,
    method_report,
    mirror_solution,
    small_prime_idempotents,
    solve_split,
    solve_split_naive,
    solve_split_usearch,
    split_from_parts,
)
from .oracle import OracleMethod, OracleResult, crt_idempotents, scan_idempotents

__version__ = "0.1.0"
