"""Compare the three r-finders on every split of every n up to a bound."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .arith import factorize
from .engine import (
    Split,
    all_splits,
    find_r_bezout,
    find_r_naive,
    find_r_usearch,
)

FINDERS = ("bezout", "usearch", "naive")


@dataclass
class FinderStats:
    name: str
    total_ops: int = 0
    max_ops: int = 0
    # sum of the per-split ceiling on ops: p-1 for naive, t for usearch
    total_bound: int | None = None
    seconds: float = 0.0


@dataclass
class BenchReport:
    n_max: int
    reps: int
    splits: int
    stats: dict[str, FinderStats]
    disagreements: list[tuple[int, int]] = field(default_factory=list)
    # (n, p, finder) where naive > p-1 or usearch > t
    bound_violations: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.bound_violations

    def render(self) -> str:
        lines = [
            f"splits of all 2 <= n <= {self.n_max}: {self.splits}, reps: {self.reps}",
            f"{'method':<8} {'total ops':>12} {'op bound':>12} {'max ops':>8} "
            f"{'total s':>10} {'mean us/split':>14}",
        ]
        for s in self.stats.values():
            mean_us = 1e6 * s.seconds / max(1, self.splits * self.reps)
            bound = "-" if s.total_bound is None else str(s.total_bound)
            lines.append(
                f"{s.name:<8} {s.total_ops:>12} {bound:>12} {s.max_ops:>8} "
                f"{s.seconds:>10.4f} {mean_us:>14.3f}"
            )
        lines.append(f"disagreements: {len(self.disagreements)}")
        lines.append(f"bound violations: {len(self.bound_violations)}")
        return "\n".join(lines) + "\n"


def _run(name: str, split: Split) -> tuple[int, int]:
    p, m = split.p, split.m
    if name == "bezout":
        return find_r_bezout(p, m)
    if name == "usearch":
        return find_r_usearch(p, m % p)
    return find_r_naive(p, m % p)


def collect_splits(n_max: int) -> list[Split]:
    return [s for n in range(2, n_max + 1) for s in all_splits(factorize(n))]


def run_bench(n_max: int, reps: int = 1) -> BenchReport:
    """Check agreement and operation-count bounds first, then time each finder.

    Operation counts: Euclid division steps for bezout, candidates ``u``
    tried for usearch (at most ``t``), candidates ``r`` tried for naive (at
    most ``p - 1``).
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    splits = collect_splits(n_max)
    stats = {name: FinderStats(name) for name in FINDERS}
    stats["naive"].total_bound = sum(s.p - 1 for s in splits)
    stats["usearch"].total_bound = sum(s.m % s.p for s in splits)
    report = BenchReport(n_max, reps, len(splits), stats)

    for split in splits:
        p, t = split.p, split.m % split.p
        answers = set()
        for name in FINDERS:
            r, ops = _run(name, split)
            answers.add(r)
            st = stats[name]
            st.total_ops += ops
            st.max_ops = max(st.max_ops, ops)
            if name == "naive" and ops > p - 1:
                report.bound_violations.append((split.n, p, name))
            if name == "usearch" and ops > t:
                report.bound_violations.append((split.n, p, name))
        if len(answers) != 1:
            report.disagreements.append((split.n, p))

    for name in FINDERS:
        start = time.perf_counter()
        for _ in range(reps):
            for split in splits:
                _run(name, split)
        stats[name].seconds = time.perf_counter() - start
    return report
