"""Result containers shared by the identity checks and verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityCheck:
    """One instance of a claimed equality, with both sides computed."""

    name: str
    params: dict
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def as_failure(self) -> dict:
        return {"params": self.params, "expected": str(self.rhs), "actual": str(self.lhs)}


@dataclass
class VerifyReport:
    suite: str
    count: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, check: IdentityCheck) -> None:
        self.count += 1
        if not check.holds:
            self.failures.append(check.as_failure())

    def to_json(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "count": self.count, "failures": self.failures, "passed": self.passed}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def summary(self) -> str:
        return f"{self.suite}: {self.count} instances, {len(self.failures)} failures"
