"""Verification reports and their JSON / CSV serialization."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .kernel import VPolytope, body_to_obj, rational_str


def body_digest(bodies: Sequence[VPolytope]) -> str:
    blob = json.dumps([body_to_obj(b) for b in bodies], separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class VerificationReport:
    """One checked inequality (``lhs <= rhs``) or identity (``lhs == rhs``)."""

    name: str
    params: dict[str, Any]
    lhs: Fraction
    rhs: Fraction
    kind: str = "inequality"
    expected_equality: bool | None = None
    proven: bool = False
    body_digest: str = ""
    witnesses: list[VerificationReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def gap(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def equality(self) -> bool:
        return self.gap == 0

    @property
    def violation(self) -> bool:
        if self.kind == "identity":
            return self.gap != 0
        return self.gap < 0

    @property
    def equality_mismatch(self) -> bool:
        """Equality observed where the characterization predicts strictness, or vice versa."""
        return self.expected_equality is not None and self.expected_equality != self.equality

    @property
    def failed(self) -> bool:
        return self.violation or any(w.failed for w in self.witnesses)

    @property
    def status(self) -> str:
        if self.violation:
            if self.kind == "inequality" and not self.proven:
                return "VIOLATION (candidate counterexample)"
            return "VIOLATION"
        if any(w.failed for w in self.witnesses):
            return "VIOLATION (witness)"
        return "equality" if self.equality else "strict"

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "kind": self.kind,
            "lhs": rational_str(self.lhs),
            "rhs": rational_str(self.rhs),
            "gap": rational_str(self.gap),
            "equality": self.equality,
            "expected_equality": self.expected_equality,
            "proven": self.proven,
            "violation": self.violation,
            "status": self.status,
            "body_digest": self.body_digest,
            "notes": list(self.notes),
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def make_report(
    name: str,
    params: dict[str, Any],
    lhs,
    rhs,
    *,
    kind: str = "inequality",
    expected_equality: bool | None = None,
    proven: bool = False,
    bodies: Sequence[VPolytope] = (),
    witnesses: Sequence[VerificationReport] = (),
    notes: Sequence[str] = (),
) -> VerificationReport:
    return VerificationReport(
        name=name,
        params=params,
        lhs=Fraction(lhs),
        rhs=Fraction(rhs),
        kind=kind,
        expected_equality=expected_equality,
        proven=proven,
        body_digest=body_digest(bodies) if bodies else "",
        witnesses=list(witnesses),
        notes=list(notes),
    )


def reports_to_json(reports: Sequence[VerificationReport], summary: dict | None = None) -> str:
    doc: dict[str, Any] = {"reports": [r.to_dict() for r in reports]}
    if summary is not None:
        doc["summary"] = summary
    return json.dumps(doc, indent=2) + "\n"


CSV_FIELDS = [
    "name", "params", "kind", "lhs", "rhs", "gap", "lhs_float", "rhs_float", "gap_float",
    "equality", "expected_equality", "proven", "violation", "body_digest",
]


def reports_to_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow({
            "name": r.name,
            "params": json.dumps(r.params, separators=(",", ":")),
            "kind": r.kind,
            "lhs": rational_str(r.lhs),
            "rhs": rational_str(r.rhs),
            "gap": rational_str(r.gap),
            "lhs_float": f"{float(r.lhs):.12g}",
            "rhs_float": f"{float(r.rhs):.12g}",
            "gap_float": f"{float(r.gap):.12g}",
            "equality": r.equality,
            "expected_equality": r.expected_equality,
            "proven": r.proven,
            "violation": r.violation,
            "body_digest": r.body_digest,
        })
    return buf.getvalue()


def summarize(reports: Sequence[VerificationReport], trials: int | None = None) -> dict[str, Any]:
    gaps = [r.gap for r in reports]
    return {
        "trials": trials,
        "reports": len(reports),
        "violations": sum(r.violation for r in reports),
        "equalities": sum(r.equality for r in reports),
        "equality_mismatches": sum(r.equality_mismatch for r in reports),
        "min_gap": rational_str(min(gaps)) if gaps else None,
    }
