"""Machine-readable verification reports."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one check: named residuals against a single tolerance.

    ``passed`` is derived, never stored, so the invariant
    pass <=> every residual < tol cannot drift.  A report is produced even
    when the check fails.
    """

    check: str
    target: str
    params: dict
    residuals: dict
    tol: float
    samples_used: int = 0
    samples_discarded: int = 0
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r < self.tol for r in self.residuals.values())

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "target": self.target,
            "params": self.params,
            "residuals": dict(self.residuals),
            "tol": self.tol,
            "samples_used": self.samples_used,
            "samples_discarded": self.samples_discarded,
            "passed": self.passed,
            "wall_time": self.wall_time,
            "notes": dict(self.notes),
        }

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.check} {self.target}: max residual {self.max_residual:.3e} (tol {self.tol:.1e})"


class _Clock:
    def __init__(self):
        self._start = time.perf_counter()
        self.elapsed = 0.0

    def stop(self):
        self.elapsed = time.perf_counter() - self._start


@contextmanager
def timed_report():
    clock = _Clock()
    try:
        yield clock
    finally:
        clock.stop()
