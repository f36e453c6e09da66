"""Uniform pass/fail records shared by every verifier and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class Check:
    name: str
    level: int
    weight: int | None
    passed: bool
    detail: Any = ""
    cut: int | None = None
    checked_order: int | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "level": self.level,
            "weight": self.weight,
            "pass": self.passed,
            "detail": self.detail,
        }
        if self.cut is not None:
            d["cut"] = self.cut
        if self.checked_order is not None:
            d["checked_order"] = self.checked_order
        d.update(self.extra)
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f"N={self.level or '-'}" + (f" k={self.weight}" if self.weight is not None else "")
        extra = f" cut={self.cut} checked={self.checked_order}" if self.cut is not None else ""
        return f"{status}  {where:<10} {self.name}{extra}  {_short(self.detail)}"


def _short(detail) -> str:
    if isinstance(detail, dict):
        return ", ".join(f"{k}={v}" for k, v in detail.items()
                         if not isinstance(v, dict) and not (isinstance(v, list) and len(v) > 8))
    return str(detail)


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)


def first_failure(checks: Iterable[Check]) -> Check | None:
    for c in checks:
        if not c.passed:
            return c
    return None
