"""Verification report record shared by all check suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one named numerical check.

    details holds the worst offenders as (input description, residual)
    pairs, sorted by residual descending, at most 10 entries.  The pass
    flag is always max_abs_error <= tolerance.
    """

    check_name: str
    grid_description: str
    max_abs_error: float
    tolerance: float
    passed: bool
    runtime_ms: int = 0
    details: list = field(default_factory=list)

    def __post_init__(self):
        self.details = sorted(self.details, key=lambda d: -d[1])[:10]
        self.passed = bool(self.max_abs_error <= self.tolerance)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check_name,
            "grid": self.grid_description,
            "max_abs_error": float(self.max_abs_error),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
            "runtime_ms": int(self.runtime_ms),
            "details": [[str(k), float(v)] for k, v in self.details],
        }


def from_residuals(check_name: str, grid_description: str, pairs, tolerance: float,
                   runtime_ms: int = 0) -> VerificationReport:
    """Build a report from (input description, residual) pairs."""
    pairs = [(str(k), float(v)) for k, v in pairs]
    worst = max((v for _, v in pairs), default=0.0)
    return VerificationReport(
        check_name=check_name,
        grid_description=grid_description,
        max_abs_error=worst,
        tolerance=tolerance,
        passed=worst <= tolerance,
        runtime_ms=runtime_ms,
        details=pairs,
    )
