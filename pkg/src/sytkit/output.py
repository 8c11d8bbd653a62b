"""Structured output records, text renderers, and the persistent count cache.

All integers are rendered as decimal strings in every format; the same
record carries the same digit strings whether printed as a table, JSON, or
CSV.  The cache file is a versioned, sorted-key text document so that a
load/save round trip is byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .counting import count_family
from .errors import CacheMismatchError
from .identities import IdentityVerdict

FORMATS = ("table", "json", "csv")
CACHE_HEADER = "sytkit cache v1"


@dataclass
class OutputRecord:
    kind: str  # count | verdict | trace | table
    payload: dict = field(default_factory=dict)


def _s(value: Any) -> Any:
    """Integers (not bools) to decimal strings, recursively."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_s(v) for v in value]
    if isinstance(value, dict):
        return {k: _s(v) for k, v in value.items()}
    return value


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def verdict_payload(v: IdentityVerdict) -> dict:
    term = lambda t: {
        "r": t.r,
        "sign": t.sign,
        "binomial": t.binomial,
        "left_factor": t.left_factor,
        "right_factor": t.right_factor,
        "term_value": t.term_value,
    }
    return {
        "identity": v.identity_id,
        "k": v.k,
        "n": v.n,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "holds": v.holds,
        "checks": [{"name": name, "value": value} for name, value in v.checks],
        "lhs_terms": [term(t) for t in v.lhs_terms],
        "rhs_terms": [term(t) for t in v.rhs_terms],
    }


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"kind": record.kind, **_s(record.payload)}, indent=2)
    if fmt == "csv":
        return _render_csv(record)
    if fmt == "table":
        return _render_table(record)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------- csv

def _csv_text(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue().rstrip("\n")


_VERDICT_CSV_HEADER = [
    "row_type", "identity", "k", "n", "lhs", "rhs", "holds",
    "side", "r", "sign", "binomial", "left_factor", "right_factor", "term_value",
    "check_name", "check_value",
]


def _render_csv(record: OutputRecord) -> str:
    p = record.payload
    if record.kind == "count":
        return _csv_text(
            ["family", "k", "n", "value"],
            [[r["family"], r["k"], r["n"], r["value"]] for r in p["rows"]],
        )
    if record.kind == "verdict":
        rows = []
        for v in p["verdicts"]:
            base = [v["identity"], v["k"], v["n"]]
            rows.append(["verdict", *base, v["lhs"], v["rhs"], v["holds"],
                         "", "", "", "", "", "", "", "", ""])
            for side, terms in (("lhs", v["lhs_terms"]), ("rhs", v["rhs_terms"])):
                for t in terms:
                    rows.append(["term", *base, "", "", "", side, t["r"], t["sign"],
                                 t["binomial"], t["left_factor"], t["right_factor"],
                                 t["term_value"], "", ""])
            for c in v["checks"]:
                rows.append(["check", *base, "", "", "", "", "", "", "", "", "", "",
                             c["name"], c["value"]])
        return _csv_text(_VERDICT_CSV_HEADER, rows)
    if record.kind == "trace":
        rows = [[name, value] for name, value in p["fields"]]
        out = _csv_text(["name", "value"], rows)
        if "table" in p:
            t = p["table"]
            out += "\n" + _csv_text(list(t["columns"]), [list(r) for r in t["rows"]])
        return out
    if record.kind == "table":
        return _csv_text(list(p["columns"]), [list(r) for r in p["rows"]])
    raise ValueError(f"unknown record kind {record.kind!r}")


# ---------------------------------------------------------------- table

def _aligned(header: list[str], rows: list[list[Any]]) -> str:
    cells = [header] + [[_cell(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _render_table(record: OutputRecord) -> str:
    p = record.payload
    if record.kind == "count":
        return _aligned(
            ["family", "k", "n", "value"],
            [[r["family"], r["k"], r["n"], r["value"]] for r in p["rows"]],
        )
    if record.kind == "verdict":
        blocks = []
        for v in p["verdicts"]:
            status = "holds" if v["holds"] else "FAILS"
            head = (
                f"{v['identity']}  k={_cell(v['k'])}  n={v['n']}  "
                f"lhs={v['lhs']}  rhs={v['rhs']}  [{status}]"
            )
            rows = []
            for side, terms in (("lhs", v["lhs_terms"]), ("rhs", v["rhs_terms"])):
                for t in terms:
                    rows.append([side, t["r"], t["sign"], t["binomial"],
                                 t["left_factor"], t["right_factor"], t["term_value"]])
            body = _aligned(
                ["side", "r", "sign", "binomial", "left_factor", "right_factor", "term_value"],
                rows,
            )
            block = head + "\n" + body
            if v["checks"]:
                block += "\n" + "\n".join(f"  {c['name']} = {c['value']}" for c in v["checks"])
            blocks.append(block)
        return "\n\n".join(blocks)
    if record.kind == "trace":
        lines = [f"{name}: {_cell(value)}" for name, value in p["fields"]]
        if "table" in p:
            t = p["table"]
            lines.append(_aligned(list(t["columns"]), [list(r) for r in t["rows"]]))
        return "\n".join(lines)
    if record.kind == "table":
        return _aligned(list(p["columns"]), [list(r) for r in p["rows"]])
    raise ValueError(f"unknown record kind {record.kind!r}")


# ---------------------------------------------------------------- cache

CacheKey = tuple[str, int | None, int]


def _key_sort(key: CacheKey) -> tuple:
    family, k, n = key
    return (family, k is not None, k if k is not None else 0, n)


def save_cache(entries: dict[CacheKey, int], path: str | Path) -> None:
    lines = [CACHE_HEADER]
    for family, k, n in sorted(entries, key=_key_sort):
        lines.append(f"{family} {'-' if k is None else k} {n} {entries[(family, k, n)]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def load_cache(path: str | Path) -> dict[CacheKey, int]:
    text = Path(path).read_text(encoding="ascii")
    lines = text.splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        raise ValueError(f"not a cache file (expected header {CACHE_HEADER!r})")
    entries: dict[CacheKey, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"malformed cache line {lineno}: {line!r}")
        family, k_text, n_text, value_text = parts
        k = None if k_text == "-" else int(k_text)
        entries[(family, k, int(n_text))] = int(value_text)
    return entries


def verify_cache_entries(entries: dict[CacheKey, int]) -> None:
    """Recompute every entry; raise on the first disagreement."""
    for (family, k, n), value in sorted(entries.items(), key=lambda kv: _key_sort(kv[0])):
        expected = count_family(family, k, n)
        if expected != value:
            raise CacheMismatchError(
                f"cache entry {family} k={'-' if k is None else k} n={n} "
                f"has {value}, recomputation gives {expected}"
            )
