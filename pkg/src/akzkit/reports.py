"""Structured pass/fail records for identity checks.

Every verification routine in the package returns one or more
VerificationReport rows.  A row says which identity was tested, at which
parameters, what both sides evaluated to, and a status:

    pass_exact          both sides are bit-identical rationals
    pass_numeric        |lhs - rhs| <= tolerance + combined error bounds
    fail                neither of the above
    skipped_pole        a formula term hit a divergent value; nothing tested
    skipped_bad_prime   a congruence denominator collides with the modulus
    not_covered         the instance lies outside the implemented family

Reports serialize to a versioned JSON document ("akzkit-report/1") whose
numeric values carry their error bounds in separate fields, never fused
into the value string.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Any

PASS_EXACT = "pass_exact"
PASS_NUMERIC = "pass_numeric"
FAIL = "fail"
SKIPPED_POLE = "skipped_pole"
SKIPPED_BAD_PRIME = "skipped_bad_prime"
NOT_COVERED = "not_covered"

_STATUSES = (PASS_EXACT, PASS_NUMERIC, FAIL, SKIPPED_POLE, SKIPPED_BAD_PRIME, NOT_COVERED)

SCHEMA = "akzkit-report/1"

__all__ = [
    "VerificationReport",
    "PASS_EXACT",
    "PASS_NUMERIC",
    "FAIL",
    "SKIPPED_POLE",
    "SKIPPED_BAD_PRIME",
    "NOT_COVERED",
    "SCHEMA",
    "report_exact",
    "report_numeric",
    "report_skip",
    "format_rational",
    "format_real",
    "summarize",
    "any_failure",
    "reports_to_document",
    "write_json",
    "Stopwatch",
]


@dataclass
class VerificationReport:
    identity_id: str
    parameters: dict[str, Any]
    lhs: str
    rhs: str
    status: str
    tolerance: float | None = None
    elapsed_seconds: float = 0.0
    lhs_error_bound: str | None = None
    rhs_error_bound: str | None = None
    detail: str | None = None

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status in (PASS_EXACT, PASS_NUMERIC)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def one_line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{self.status:<17} {self.identity_id} [{params}]"
        if self.status == FAIL:
            line += f"  lhs={self.lhs} rhs={self.rhs}"
        if self.detail:
            line += f"  ({self.detail})"
        return line


class Stopwatch:
    """Tiny helper so every report can carry wall-clock cost."""

    def __init__(self) -> None:
        self.start = time.perf_counter()

    def elapsed(self) -> float:
        return round(time.perf_counter() - self.start, 6)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def format_real(x: Any, digits: int = 20) -> str:
    import mpmath

    return mpmath.nstr(mpmath.mpf(x), digits, strip_zeros=False)


def report_exact(
    identity_id: str,
    parameters: dict[str, Any],
    lhs: Fraction | int | str,
    rhs: Fraction | int | str,
    *,
    equal: bool | None = None,
    elapsed: float = 0.0,
    detail: str | None = None,
) -> VerificationReport:
    """Build a report for an exact (rational or symbolic) comparison.

    When lhs/rhs are rationals the equality test is automatic; for
    pre-formatted strings pass the outcome through `equal`.
    """
    if equal is None:
        equal = lhs == rhs
    lhs_s = lhs if isinstance(lhs, str) else format_rational(lhs)
    rhs_s = rhs if isinstance(rhs, str) else format_rational(rhs)
    return VerificationReport(
        identity_id=identity_id,
        parameters=parameters,
        lhs=lhs_s,
        rhs=rhs_s,
        status=PASS_EXACT if equal else FAIL,
        tolerance=None,
        elapsed_seconds=elapsed,
        detail=detail,
    )


def report_numeric(
    identity_id: str,
    parameters: dict[str, Any],
    lhs: Any,
    rhs: Any,
    tolerance: float,
    *,
    elapsed: float = 0.0,
    detail: str | None = None,
    extra_allowance: Any = 0,
) -> VerificationReport:
    """Build a report comparing two EvalResult-like objects.

    Both arguments need `.value` and `.error_bound` attributes.  The pass
    condition is |lhs - rhs| <= tolerance + both error bounds (plus any
    caller-supplied extra allowance, e.g. for a hard-coded side).
    """
    diff = abs(lhs.value - rhs.value)
    allowed = tolerance + lhs.error_bound + rhs.error_bound + extra_allowance
    ok = diff <= allowed
    return VerificationReport(
        identity_id=identity_id,
        parameters=parameters,
        lhs=format_real(lhs.value),
        rhs=format_real(rhs.value),
        status=PASS_NUMERIC if ok else FAIL,
        tolerance=tolerance,
        elapsed_seconds=elapsed,
        lhs_error_bound=format_real(lhs.error_bound, 3),
        rhs_error_bound=format_real(rhs.error_bound, 3),
        detail=detail,
    )


def report_skip(
    identity_id: str,
    parameters: dict[str, Any],
    status: str,
    detail: str,
    *,
    elapsed: float = 0.0,
) -> VerificationReport:
    if status not in (SKIPPED_POLE, SKIPPED_BAD_PRIME, NOT_COVERED):
        raise ValueError(f"not a skip status: {status!r}")
    return VerificationReport(
        identity_id=identity_id,
        parameters=parameters,
        lhs="",
        rhs="",
        status=status,
        elapsed_seconds=elapsed,
        detail=detail,
    )


def summarize(reports: list[VerificationReport]) -> dict[str, int]:
    counts = {status: 0 for status in _STATUSES}
    for r in reports:
        counts[r.status] += 1
    counts["total"] = len(reports)
    return counts


def any_failure(reports: list[VerificationReport]) -> bool:
    return any(r.failed for r in reports)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def reports_to_document(reports: list[VerificationReport]) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "reports": [_jsonable(asdict(r)) for r in reports],
        "summary": summarize(reports),
    }


def write_json(reports: list[VerificationReport], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(reports_to_document(reports), fh, indent=2)
        fh.write("\n")
