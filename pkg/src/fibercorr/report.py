"""Structured verification reports: one record per checked claim, rendered
both human-readable and as deterministic JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"


@dataclass(frozen=True)
class CheckRecord:
    claim: str
    statement: str
    status: str
    values: dict

    def render(self):
        parts = [f"{self.status.upper():7s} {self.claim:30s} {self.statement}"]
        if self.values:
            kv = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(self.values.items()))
            parts.append(f"    {kv}")
        return "\n".join(parts)


def _fmt(value):
    if isinstance(value, (list, tuple)):
        return ",".join(_fmt(v) for v in value)
    return str(value)


@dataclass
class Report:
    command: str
    records: list = field(default_factory=list)

    def add(self, claim, statement, status, **values):
        self.records.append(CheckRecord(claim, statement, status, values))

    def check(self, claim, statement, ok, **values):
        self.add(claim, statement, PASS if ok else FAIL, **values)
        return ok

    def flag(self, claim, statement, **values):
        self.add(claim, statement, FLAGGED, **values)

    def counts(self):
        out = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self):
        return all(r.status != FAIL for r in self.records)

    @property
    def exit_code(self):
        return 0 if self.ok else 1

    def render_text(self):
        lines = [r.render() for r in self.records]
        c = self.counts()
        lines.append(
            f"summary: {c[PASS]} pass, {c[FAIL]} fail, {c[FLAGGED]} flagged"
        )
        return "\n".join(lines) + "\n"

    def to_json(self):
        doc = {
            "command": self.command,
            "records": [
                {
                    "claim": r.claim,
                    "statement": r.statement,
                    "status": r.status,
                    "values": _jsonable(r.values),
                }
                for r in self.records
            ],
            "summary": self.counts(),
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)
