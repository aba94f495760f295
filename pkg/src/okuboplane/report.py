"""Verification reports shared by the theorem harness, collineation checks
and the CLI.

A report either expects a property to hold on every trial (``expect-pass``,
failures are counterexamples to the property) or expects to find an exact
counterexample to a false statement (``expect-witness``, the found witness is
recorded and *absence* of one within budget is logged as a failure).  Either
way the invariant is the same: verdict is "pass" iff ``failures`` is empty.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Iterator


@dataclass
class TheoremReport:
    name: str
    kind: str
    seed: int
    trials: int
    mode: str = "expect-pass"  # or "expect-witness"
    failures: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def ok(self) -> bool:
        return not self.failures

    def require_witness(self, description: str) -> None:
        """For expect-witness reports: log a failure if no witness was found."""
        if self.mode == "expect-witness" and not self.witnesses:
            self.failures.append({"reason": f"no witness found: {description}"})

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "seed": self.seed,
            "trials": self.trials,
            "mode": self.mode,
            "verdict": self.verdict,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def text_line(self) -> str:
        tail = ""
        if self.mode == "expect-witness" and self.witnesses:
            tail = f"  [{len(self.witnesses)} witness(es) found]"
        elif self.failures:
            tail = f"  [{len(self.failures)} failure(s)]"
        return (
            f"{self.verdict.upper():4s}  {self.name}  kind={self.kind}"
            f"  trials={self.trials}  seed={self.seed}{tail}"
        )


@contextmanager
def stopwatch() -> Iterator[Callable[[], float]]:
    """with stopwatch() as elapsed: ...; elapsed() -> milliseconds."""
    start = time.perf_counter()
    yield lambda: (time.perf_counter() - start) * 1000.0


def reports_to_json(reports: list[TheoremReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2) + "\n"
