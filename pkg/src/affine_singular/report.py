"""Verification reports shared by all checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one mechanical check.

    claim is a stable human-readable identifier, parameters echo the inputs,
    and witness carries the offending data when the verdict is False (or
    supporting data worth reporting on success).  notes flag anything the
    reader should know, e.g. that a constant was derived rather than imposed.
    """

    claim: str
    verdict: bool
    parameters: dict = field(default_factory=dict)
    witness: dict | None = None
    timing_ms: int = 0
    seed: int | None = None
    notes: list = field(default_factory=list)
    details: dict | None = None

    def to_obj(self) -> dict:
        obj = {
            "claim": self.claim,
            "verdict": self.verdict,
            "parameters": self.parameters,
            "timing_ms": self.timing_ms,
            "seed": self.seed,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.notes:
            obj["notes"] = list(self.notes)
        if self.details is not None:
            obj["details"] = self.details
        return obj

    def summary(self) -> str:
        return "%s  %s" % ("PASS" if self.verdict else "FAIL", self.claim)
