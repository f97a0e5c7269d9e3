from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of checking one identity over a parameter range.

    ``failures`` holds one entry per failing parameter tuple, with both sides
    rendered as text.  ``observations`` carries data recorded without being
    asserted (e.g. even-n values of an identity only claimed for odd n).
    """

    identity: str
    ranges: list[tuple[str, int, int]]
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    checked: int = 0
    observations: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def record(self, params: dict[str, int], lhs, rhs) -> bool:
        from .render import render_text

        self.checked += 1
        if lhs == rhs:
            return True
        self.failures.append(
            {"params": dict(params), "lhs": render_text(lhs), "rhs": render_text(rhs)}
        )
        return False

    def finish(self, started: float) -> "VerificationReport":
        self.failures.sort(key=lambda f: tuple(f["params"].values()))
        self.elapsed = time.perf_counter() - started
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "ranges": [list(r) for r in self.ranges],
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "observations": self.observations,
            "elapsed": round(self.elapsed, 6),
        }

    def summary(self) -> str:
        span = ", ".join(f"{name}={lo}..{hi}" for name, lo, hi in self.ranges)
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.identity} [{span}] checked={self.checked}: {status}"
