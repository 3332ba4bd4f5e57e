"""Verification report records shared by the sweep-style checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a bounded sweep.

    A failed report always carries a counterexample tuple; the note holds
    human-readable context (sweep parameters, documented caveats).
    """

    passed: bool
    checked: int
    counterexample: tuple | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValueError("failed report must carry a counterexample")

    def to_json_dict(self, elem_json: Callable[[Any], Any] = str) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = [elem_json(e) for e in self.counterexample]
        return {
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": ce,
            "note": self.note,
        }
