"""Run every structural property of the split construction over a range of n.

Used by ``idemring verify``.  Each check appends a :class:`Violation` rather
than raising, so one sweep reports everything that went wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import DomainError, Factorization, factorize
from .engine import (
    all_idempotents_prop51,
    all_idempotents_prop52,
    all_idempotents_prop53,
    all_splits,
    enumerate_splits,
    h_plus,
    mirror_solution,
    solve_split,
    solve_split_usearch,
    split_from_parts,
)
from .oracle import crt_idempotents, scan_idempotents

# exhaustive r-uniqueness scan only for p up to this size
UNIQUENESS_SCAN_LIMIT = 1000


@dataclass(frozen=True)
class Violation:
    n: int
    invariant: str
    detail: str = ""

    def __str__(self) -> str:
        return f"n={self.n}: {self.invariant}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class VerifyReport:
    values_checked: int = 0
    splits_solved: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return (
            f"{self.values_checked} values checked, {self.splits_solved} splits solved, "
            f"{len(self.violations)} violations"
        )


def check_sets(fac: Factorization, report: VerifyReport, scan: bool = True) -> None:
    n = fac.n
    bad = report.violations.append
    results = {
        "prop51": all_idempotents_prop51(fac).members,
        "prop52": all_idempotents_prop52(fac).members,
        "prop53": all_idempotents_prop53(fac).members,
        "crt": crt_idempotents(fac).members,
    }
    if scan:
        results["scan"] = scan_idempotents(n).members
    reference = results["crt"]
    for name, members in results.items():
        if members != reference:
            bad(Violation(n, "method agreement", f"{name} differs from crt"))
    if len(reference) != 2**fac.k:
        bad(Violation(n, "cardinality 2^k", f"got {len(reference)}"))
    members = set(reference)
    for e in reference:
        if e * e % n != e:
            bad(Violation(n, "idempotency", f"e={e}"))
        if (n + 1 - e) % n not in members:
            bad(Violation(n, "complement closure", f"e={e}"))
    if not {0, 1} <= members:
        bad(Violation(n, "trivial idempotents"))


def check_splits(fac: Factorization, report: VerifyReport) -> None:
    n = fac.n
    bad = report.violations.append
    if fac.k < 2:
        return
    plus_forms, zero_forms = set(), set()
    for split in all_splits(fac):
        sol = solve_split(split)
        report.splits_solved += 1
        p, m, t, r = sol.p, sol.m, sol.t, sol.r
        plus_forms.add(sol.e_plus)
        zero_forms.add(sol.e_zero)

        if solve_split_usearch(split) != sol:
            bad(Violation(n, "bezout/u-search agreement", f"p={p}"))
        if p <= UNIQUENESS_SCAN_LIMIT:
            hits = [c for c in range(1, p) if (c * t + 1) % p == 0]
            if hits != [r]:
                bad(Violation(n, "uniqueness of r", f"p={p}, hits={hits}"))
        if not (1 <= sol.u <= t and math.gcd(p, r) == 1):
            bad(Violation(n, "bounds on u and gcd(p, r)", f"p={p}"))
        if not (sol.e_plus % p == 0 and sol.e_plus % m == 1
                and sol.e_zero % p == 1 and sol.e_zero % m == 0):
            bad(Violation(n, "CRT characterization", f"p={p}"))
        if sol.e_plus + sol.e_zero != n + 1:
            bad(Violation(n, "complement pair", f"p={p}"))

        swapped = solve_split(split.complement())
        if (swapped.e_zero, swapped.e_plus) != (sol.e_plus, sol.e_zero):
            bad(Violation(n, "swap identities", f"p={p}"))

        try:
            mirrored = mirror_solution(sol)
        except DomainError:
            continue
        direct = solve_split(split_from_parts(p, mirrored.m))
        if mirrored != direct:
            bad(Violation(n, "mirror equals direct solve", f"p={p}"))
        elif mirror_solution(mirrored) != sol:
            bad(Violation(n, "mirror involution", f"p={p}"))

    nontrivial = set(crt_idempotents(fac).members) - {0, 1}
    if not (nontrivial <= plus_forms and nontrivial <= zero_forms):
        bad(Violation(n, "canonical forms"))

    k = fac.k
    families = {h: set(h_plus(fac, h)) for h in range(1, k)}
    for h, fam in families.items():
        want = math.comb(k, h) if 2 * h == k else 2 * math.comb(k, h)
        if len(fam) != want:
            bad(Violation(n, "family cardinality", f"h={h}: {len(fam)} != {want}"))
    for g in range(1, k):
        for h in range(g + 1, k):
            if g + h == k:
                if families[g] != families[h]:
                    bad(Violation(n, "complementary families equal", f"g={g}, h={h}"))
            elif families[g] & families[h]:
                bad(Violation(n, "families disjoint", f"g={g}, h={h}"))
    for h in range(1, k):
        if len(enumerate_splits(fac, h)) != math.comb(k, h):
            bad(Violation(n, "split count", f"h={h}"))


def verify_range(n_max: int, scan: bool = True) -> VerifyReport:
    """Check every ``2 <= n <= n_max``."""
    report = VerifyReport()
    for n in range(2, n_max + 1):
        fac = factorize(n)
        check_sets(fac, report, scan=scan)
        check_splits(fac, report)
        report.values_checked += 1
    return report
