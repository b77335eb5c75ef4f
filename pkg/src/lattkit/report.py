"""Tri-state claim checks shared by the theorem suites."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_MET = "hypothesis not met"


@dataclass(frozen=True)
class Check:
    claim: str
    status: Status
    witness: Any = None
    asserted: bool = True   # logged-only claims do not count as failures

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILS

    def to_json(self) -> dict:
        out = {"claim": self.claim, "status": self.status.value}
        if not self.asserted:
            out["asserted"] = False
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class Report(list):
    """A list of :class:`Check` with helpers for gated claims."""

    def claim(self, name: str, hypothesis: bool, conclusion, witness=None, asserted: bool = True) -> Check:
        """Record ``name``.

        ``conclusion`` may be a bool, or a callable returning either a bool or
        ``(bool, witness)``; callables are only evaluated when the hypothesis holds.
        """
        if not hypothesis:
            c = Check(name, Status.NOT_MET, None, asserted)
        else:
            value = conclusion() if callable(conclusion) else conclusion
            if isinstance(value, tuple):
                value, witness = value
            c = Check(name, Status.HOLDS if value else Status.FAILS, None if value else witness, asserted)
        self.append(c)
        return c

    def failures(self, asserted_only: bool = True) -> list[Check]:
        return [c for c in self if c.failed and (c.asserted or not asserted_only)]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def by_claim(self) -> dict[str, Check]:
        return {c.claim: c for c in self}

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self]


def first_failure(items, test: Callable):
    """(True, None) if ``test(item)`` holds for every item, else (False, item)."""
    for item in items:
        if not test(item):
            return False, item
    return True, None
