"""Serialization of command reports to JSON or TSV."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

INT64_MAX = 2**63 - 1


@dataclass
class CommandReport:
    command: list[str]
    result: object
    ok: bool = True
    wall_time: float = 0.0
    tsv_rows: list[list] | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        meta = {"command": self.command, "ok": self.ok, "wall_time": round(self.wall_time, 3)}
        if isinstance(self.result, dict):
            clash = set(meta) & set(self.result)
            if clash:
                raise ValueError(f"result fields {clash} collide with report metadata")
            return {**self.result, **meta}
        return {"result": self.result, **meta}


def to_jsonable(obj):
    """Recursively convert to JSON types; integers beyond 64 bits become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if -INT64_MAX - 1 <= obj <= INT64_MAX else str(obj)
    if isinstance(obj, Fraction):
        return to_jsonable(obj.numerator) if obj.denominator == 1 else str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(prefix: str, obj, out: list[tuple[str, str]]):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], out)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}.{i}" if prefix else str(i), v, out)
    elif isinstance(obj, list):
        out.append((prefix, ",".join(_scalar(v) for v in obj)))
    else:
        out.append((prefix, _scalar(obj)))


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return str(v)


def emit_report(report, fmt: str = "json") -> str:
    """JSON (sorted keys) or TSV.

    TSV rules: a ``CommandReport`` carrying a ``tsv_rows`` table prints
    that table; otherwise the result is flattened to ``key<TAB>value`` lines.
    """
    data = to_jsonable(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, ensure_ascii=False)
    if fmt != "tsv":
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, CommandReport) and report.tsv_rows is not None:
        return "\n".join("\t".join(_scalar(x) for x in row) for row in report.tsv_rows)
    if isinstance(report, CommandReport):
        data = {k: v for k, v in data.items() if k not in ("command", "wall_time")}
    rows: list[tuple[str, str]] = []
    _flatten("", data, rows)
    return "\n".join(f"{k}\t{v}" for k, v in rows)
