"""Graph file formats and report serialization.

Two text formats:

* dimacs: `c` comment lines, one `p edge <n> <m>` header, then exactly m
  `e <u> <v>` lines with 1-based endpoints.
* edgelist: `#` comment lines and `u v` pairs with 0-based endpoints.  The
  writer emits a leading `# n <n>` directive so isolated trailing vertices
  survive a round trip; the parser honors the directive, an explicit n
  argument overrides it, and otherwise n is inferred as max id + 1.

Parse errors carry the 1-based line number.  Writers emit edges sorted, so
output is canonical: parse(write(g)) == g for every graph.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .graph import Graph, GraphError
from .harness import RatioReport
from .solvers import IterationRecord, Mode, Solution

FORMATS = ("dimacs", "edgelist")

CSV_COLUMNS = (
    "instance_id",
    "family",
    "seed",
    "n",
    "m",
    "max_degree",
    "min_degree",
    "mode",
    "k",
    "greedy_size",
    "exact_size",
    "ratio",
    "bound",
    "bound_satisfied",
    "ledger_checks_passed",
    "trivial",
    "skip_reason",
    "greedy_time_s",
    "exact_time_s",
)


class FormatError(ValueError):
    """Parse error with a 1-based source line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str, fmt: str, *, n: int | None = None) -> Graph:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text, n=n)
    raise ValueError(f"unknown format {fmt!r}; known: {', '.join(FORMATS)}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "edgelist":
        return write_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}; known: {', '.join(FORMATS)}")


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError(line_no, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(line_no, f"expected 'p edge <n> <m>', got {line!r}")
            n = _parse_int(fields[2], line_no, "vertex count")
            declared_m = _parse_int(fields[3], line_no, "edge count")
        elif fields[0] == "e":
            if n is None:
                raise FormatError(line_no, "edge before problem line")
            if len(fields) != 3:
                raise FormatError(line_no, f"expected 'e <u> <v>', got {line!r}")
            u = _parse_int(fields[1], line_no, "endpoint")
            v = _parse_int(fields[2], line_no, "endpoint")
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(line_no, f"endpoint outside 1..{n} in {line!r}")
            if u == v:
                raise FormatError(line_no, f"self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(line_no, f"unrecognized line {line!r}")
    if n is None:
        raise FormatError(len(text.splitlines()) + 1, "missing problem line")
    if declared_m != len(edges):
        raise FormatError(
            len(text.splitlines()) + 1,
            f"header declares {declared_m} edges but {len(edges)} e-lines found",
        )
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise FormatError(len(text.splitlines()) + 1, str(exc)) from exc


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, *, n: int | None = None) -> Graph:
    directive_n = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n" and directive_n is None:
                try:
                    directive_n = int(fields[1])
                except ValueError:
                    raise FormatError(line_no, f"bad n directive {line!r}") from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(line_no, f"expected 'u v', got {line!r}")
        u = _parse_int(fields[0], line_no, "endpoint")
        v = _parse_int(fields[1], line_no, "endpoint")
        if u < 0 or v < 0:
            raise FormatError(line_no, f"negative endpoint in {line!r}")
        if u == v:
            raise FormatError(line_no, f"self-loop at {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    total = n if n is not None else directive_n
    if total is None:
        if max_id < 0:
            raise FormatError(1, "cannot infer vertex count from an empty edge list")
        total = max_id + 1
    try:
        return Graph(total, edges)
    except GraphError as exc:
        raise FormatError(len(text.splitlines()) + 1, str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- structured documents ----------------------------------------------------


def solution_to_dict(sol: Solution) -> dict:
    n, m, digest = sol.graph_fingerprint
    return {
        "mode": sol.mode.value,
        "k": sol.k,
        "n": n,
        "m": m,
        "graph_digest": digest,
        "trivial": sol.trivial,
        "chosen": list(sol.chosen),
        "iterations": [
            {
                "index": rec.index,
                "vertex": rec.vertex,
                "score": rec.score,
                "newly_covered": list(rec.newly_covered),
                "tokens_placed": {str(v): c for v, c in sorted(rec.tokens_placed.items())},
                "covered_after": rec.covered_after,
            }
            for rec in sol.iterations
        ],
    }


def solution_from_dict(doc: dict, fingerprint: tuple[int, int, str]) -> Solution:
    return Solution(
        mode=Mode(doc["mode"]),
        k=doc["k"],
        chosen=tuple(doc["chosen"]),
        iterations=tuple(
            IterationRecord(
                index=rec["index"],
                vertex=rec["vertex"],
                score=rec["score"],
                newly_covered=tuple(rec["newly_covered"]),
                tokens_placed={int(v): c for v, c in rec["tokens_placed"].items()},
                covered_after=rec["covered_after"],
            )
            for rec in doc["iterations"]
        ),
        graph_fingerprint=fingerprint,
        trivial=doc["trivial"],
    )


def report_to_dict(report: RatioReport) -> dict:
    doc = {}
    for col in CSV_COLUMNS:
        value = getattr(report, col)
        doc[col] = value.value if isinstance(value, Mode) else value
    return doc


def write_report_csv(reports: Iterable[RatioReport]) -> str:
    """Render reports as CSV in the documented column order.

    Ratios and bounds use 6 decimal places; missing values are empty cells.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        row = []
        for col in CSV_COLUMNS:
            value = getattr(report, col)
            if value is None:
                row.append("")
            elif isinstance(value, Mode):
                row.append(value.value)
            elif col in ("ratio", "bound"):
                row.append(f"{value:.6f}")
            elif col in ("greedy_time_s", "exact_time_s"):
                row.append(f"{value:.6f}")
            elif isinstance(value, bool):
                row.append("true" if value else "false")
            else:
                row.append(str(value))
        writer.writerow(row)
    return buf.getvalue()


def write_report_json(reports: Iterable[RatioReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(line_no, f"bad {what} {token!r}") from None
