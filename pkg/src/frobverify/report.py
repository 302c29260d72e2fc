"""Check records shared by every verification suite."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from .exact import MultiPoly

PASS, WARN, FAIL, ERROR = "pass", "warn", "fail", "error"
_SEVERITY = {PASS: 0, WARN: 1, FAIL: 2, ERROR: 3}


@dataclass(frozen=True)
class CheckResult:
    id: str
    kind: str  # "exact" or "numeric"
    status: str
    residual: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (PASS, WARN)

    def to_dict(self) -> dict:
        return asdict(self)


def witness_text(p: MultiPoly, max_terms: int = 10) -> str:
    """Leading terms of a nonzero witness polynomial, for failure details."""
    items = p.items()
    shown = MultiPoly(p.table, dict(items[:max_terms]))
    suffix = f" + ... ({len(items)} terms)" if len(items) > max_terms else ""
    return f"witness: {shown.to_text()}{suffix}"


def exact_check(check_id: str, residual: MultiPoly | bool, detail: str = "") -> CheckResult:
    """Record an exact identity: ``residual`` is the zero polynomial or ``True``."""
    if isinstance(residual, bool):
        ok = residual
        text = detail if ok or detail else "identity does not hold"
    else:
        ok = residual.is_zero()
        text = detail if ok else witness_text(residual)
    return CheckResult(check_id, "exact", PASS if ok else FAIL, 0.0 if ok else None, 0.0, text)


def numeric_check(
    check_id: str, residual: float, tol: float = 1e-6, warn: float | None = 1e-4, detail: str = ""
) -> CheckResult:
    """Tolerance ladder: pass below ``tol``, warn below ``warn``, fail otherwise."""
    residual = float(residual)
    if residual < tol:
        status = PASS
    elif warn is not None and residual < warn:
        status = WARN
    else:
        status = FAIL
    return CheckResult(check_id, "numeric", status, residual, tol, detail)


def worst(results: Iterable[CheckResult]) -> str:
    statuses = [r.status for r in results]
    return max(statuses, key=_SEVERITY.__getitem__, default=PASS)


REPORT_VERSION = "frobverify-report/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["version", "seed", "cases"],
    "additionalProperties": False,
    "properties": {
        "version": {"const": REPORT_VERSION},
        "seed": {"type": "integer"},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "kind", "status", "residual", "tolerance", "detail"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "kind": {"enum": ["exact", "numeric"]},
                    "status": {"enum": [PASS, WARN, FAIL, ERROR]},
                    "residual": {"type": ["number", "null"]},
                    "tolerance": {"type": ["number", "null"]},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}


def build_report(cases: Iterable[CheckResult], seed: int) -> dict:
    """Report document with cases in canonical (id) order; ids must be unique."""
    cases = sorted(cases, key=lambda c: c.id)
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise ValueError(f"duplicate case ids: {dup}")
    return {"version": REPORT_VERSION, "seed": int(seed), "cases": [_jsonable(c.to_dict()) for c in cases]}


def _jsonable(case: dict) -> dict:
    out = dict(case)
    for key in ("residual", "tolerance"):
        v = out[key]
        out[key] = None if v is None or v != v or v in (float("inf"), float("-inf")) else float(v)
    return out


def validate_report(doc: dict) -> None:
    """Raise jsonschema.ValidationError unless ``doc`` matches the report schema."""
    import jsonschema

    jsonschema.validate(doc, REPORT_SCHEMA)
