"""Row model and renderers for the split tables and idempotent listings."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import Factorization
from .engine import IdempotentSet, MethodReport, SplitSolution

# method name -> idempotent columns kept
TABLE_COLUMNS = {
    "prop51": ("rm+1", "(p-r)m"),
    "prop52": ("rm+1",),
    "prop53": ("(p-r)m",),
}


def format_factors(factors) -> str:
    return "*".join(f"{q}^{a}" if a > 1 else str(q) for q, a in factors)


@dataclass(frozen=True)
class TableRow:
    family: int
    p: int
    m: int
    t: int
    r: int
    e_plus: int
    e_zero: int
    p_label: str
    m_label: str

    @classmethod
    def from_solution(cls, family: int, sol: SplitSolution) -> "TableRow":
        split = sol.split
        return cls(
            family,
            sol.p,
            sol.m,
            sol.t,
            sol.r,
            sol.e_plus,
            sol.e_zero,
            format_factors(split.p_factors()),
            format_factors(split.m_factors()),
        )

    def cells(self, method: str) -> list[str]:
        out = [f"{self.family}+", self.p_label, self.m_label, str(self.t), str(self.r)]
        cols = TABLE_COLUMNS[method]
        if "rm+1" in cols:
            out.append(str(self.e_plus))
        if "(p-r)m" in cols:
            out.append(str(self.e_zero))
        return out


def table_rows(report: MethodReport) -> list[TableRow]:
    return [TableRow.from_solution(h, sol) for h, sols in report.blocks for sol in sols]


def table_header(method: str) -> list[str]:
    return ["h+", "p", "m", "t", "r", *TABLE_COLUMNS[method]]


def render_table_tsv(report: MethodReport) -> str:
    lines = ["\t".join(table_header(report.method))]
    lines += ["\t".join(row.cells(report.method)) for row in table_rows(report)]
    return "\n".join(lines) + "\n"


def render_table_text(report: MethodReport) -> str:
    header = table_header(report.method)
    body = [row.cells(report.method) for row in table_rows(report)]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]

    def line(cells):
        return "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()

    out = [f"n = {report.fac.n} = {report.fac}, k = {report.fac.k}, method {report.method}"]
    out.append(line(header))
    out.append("  ".join("-" * w for w in widths))
    prev = None
    for row, cells in zip(table_rows(report), body):
        if prev is not None and row.family != prev:
            out.append("")
        out.append(line(cells))
        prev = row.family
    if not body:
        out.append("(no coprime splits: only the trivial idempotents 0 and 1)")
    return "\n".join(out) + "\n"


def render_table_json(report: MethodReport) -> str:
    rows = [
        {
            "h": row.family,
            "p": row.p,
            "m": row.m,
            "t": row.t,
            "r": row.r,
            **({"e_plus": row.e_plus} if "rm+1" in TABLE_COLUMNS[report.method] else {}),
            **({"e_zero": row.e_zero} if "(p-r)m" in TABLE_COLUMNS[report.method] else {}),
        }
        for row in table_rows(report)
    ]
    doc = {
        "n": report.fac.n,
        "k": report.fac.k,
        "factors": [list(f) for f in report.fac.factors],
        "method": report.method,
        "rows": rows,
    }
    return json.dumps(doc) + "\n"


def render_members(fac: Factorization, method: str, members: IdempotentSet, fmt: str) -> str:
    if fmt == "text":
        return " ".join(map(str, members)) + "\n"
    if fmt == "tsv":
        return "n\tresidue\n" + "".join(f"{fac.n}\t{e}\n" for e in members)
    if fmt == "json":
        doc = {
            "n": fac.n,
            "k": fac.k,
            "factors": [list(f) for f in fac.factors],
            "method": method,
            "members": list(members),
        }
        return json.dumps(doc) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
