from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckReport:
    """Outcome of one claim on one instance.

    ``elapsed`` is wall time in seconds and is deliberately left out of
    :meth:`to_json` so that repeated runs serialize identically.
    """

    claim_id: str
    instance: str
    verdict: str
    witness: dict[str, Any] | None = None
    reason: str | None = None
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "claim": self.claim_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": self.witness,
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(", ", ": "))

    def to_line(self) -> str:
        text = f"{self.verdict.upper():7} {self.claim_id} {self.instance}"
        if self.reason:
            text += f" ({self.reason})"
        if self.witness is not None:
            text += f" witness={json.dumps(self.witness)}"
        return text


def verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def report(claim_id: str, instance: str, witness: dict[str, Any] | None,
           **details: Any) -> CheckReport:
    """Pass iff ``witness`` is None."""
    return CheckReport(claim_id, instance, PASS if witness is None else FAIL,
                       witness=witness, details=details)


def skipped(claim_id: str, instance: str, reason: str) -> CheckReport:
    return CheckReport(claim_id, instance, SKIPPED, reason=reason)
