"""Verification records and their JSON-lines / CSV serialisation."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    Exact-mode checks pass only with a literal zero residual; float checks
    compare against ``tolerance`` (kept in ``params`` for provenance).
    """

    id: str
    params: dict = field(default_factory=dict)
    mode: str = "exact"
    residual: float | int | str = 0
    passed: bool = False
    notes: str = ""

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "params": _jsonable(self.params),
            "mode": self.mode,
            "residual": _jsonable(self.residual),
            "pass": bool(self.passed),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_record(cls, rec: dict) -> "VerificationReport":
        return cls(rec["id"], rec.get("params", {}), rec.get("mode", "exact"),
                   rec.get("residual", 0), rec.get("pass", False), rec.get("notes", ""))


def sort_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: (r.id, json.dumps(_jsonable(r.params), sort_keys=True)))


def to_jsonl(reports: Iterable[VerificationReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "params", "mode", "residual", "pass", "notes"])
    for r in reports:
        rec = r.to_record()
        w.writerow([rec["id"], json.dumps(rec["params"], sort_keys=True), rec["mode"],
                    json.dumps(rec["residual"]), rec["pass"], rec["notes"]])
    return buf.getvalue()


def read_jsonl(text: str) -> list[VerificationReport]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            rec = json.loads(line)
            if "id" in rec:
                out.append(VerificationReport.from_record(rec))
    return out


def summary(reports: Iterable[VerificationReport]) -> dict:
    reports = list(reports)
    failed = [r.id for r in reports if not r.passed]
    return {"total": len(reports), "passed": len(reports) - len(failed), "failed": failed}


def max_abs(values) -> float:
    return max((abs(v) for v in values), default=0.0)


__all__ = ["VerificationReport", "sort_reports", "to_jsonl", "to_csv", "read_jsonl", "summary", "max_abs", "asdict"]
