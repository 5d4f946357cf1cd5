"""Pass/fail records shared by every verification suite."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .algebra import RepMatrix


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    witness: Optional[str] = None
    residual: str = "0"

    @classmethod
    def passed(cls, name: str) -> "CheckResult":
        return cls(name, "pass", None, "0")

    @classmethod
    def failed(cls, name: str, witness: str, residual: float | str = "nonzero") -> "CheckResult":
        if isinstance(residual, float):
            residual = f"{residual:.6g}"
        return cls(name, "fail", witness, str(residual))

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "witness": self.witness, "residual": self.residual}


def expect_zero(name: str, cases: Iterable[tuple[str, RepMatrix]]) -> CheckResult:
    """Fail at the first case whose matrix is not exactly zero."""
    for label, m in cases:
        if not m.is_zero():
            r, c, v = m.first_nonzero()
            return CheckResult.failed(name, f"{label}: entry ({r},{c}) = {v}", m.max_abs())
    return CheckResult.passed(name)


def expect_true(name: str, cases: Iterable[tuple[str, bool]]) -> CheckResult:
    for label, ok in cases:
        if not ok:
            return CheckResult.failed(name, label)
    return CheckResult.passed(name)
