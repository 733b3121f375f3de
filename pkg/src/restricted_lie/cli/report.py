"""Command reports: a JSON contract plus a text rendering."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from ..errors import EXIT_CHECK_FAILED, EXIT_OK, RestrictedLieError


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def inputs_digest(command: str, inputs: dict[str, Any]) -> str:
    """SHA-256 over the command name and its canonicalized inputs."""
    blob = canonical_json({"command": command, "inputs": inputs}).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


@dataclass
class Report:
    """Outcome of one command.

    ``findings`` are structured entries (``kind`` plus details); ``lines`` is
    the human-readable body printed without ``--json``.
    """

    command: str
    inputs: dict[str, Any]
    passed: bool = True
    findings: list[dict[str, Any]] = field(default_factory=list)
    result: dict[str, Any] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    duration_ms: int | None = None

    @property
    def digest(self) -> str:
        return inputs_digest(self.command, self.inputs)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_CHECK_FAILED

    def fail(self, kind: str, detail: str, **extra: Any) -> None:
        self.passed = False
        self.findings.append({"kind": kind, "detail": detail, **extra})

    def note(self, kind: str, detail: str, **extra: Any) -> None:
        self.findings.append(
            {"kind": kind, "detail": detail, "severity": "note", **extra}
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "inputsDigest": self.digest,
            "passed": self.passed,
            "findings": self.findings,
            "result": self.result,
            "durationMs": self.duration_ms,
        }

    def to_json(self) -> str:
        try:
            return json.dumps(self.to_dict(), indent=2, sort_keys=True)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Cannot serialize report to JSON: {e}") from e

    def format_text(self) -> str:
        body = list(self.lines)
        for finding in self.findings:
            marker = "note" if finding.get("severity") == "note" else "FAIL"
            body.append(f"{marker}: {finding['kind']}: {finding['detail']}")
        body.append(f"{self.command}: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(body)


def error_payload(command: str, error: RestrictedLieError) -> dict[str, Any]:
    """JSON body for a command that stopped on an error."""
    return {
        "command": command,
        "passed": False,
        "error": {
            "type": type(error).__name__,
            "code": error.error_code,
            "message": error.message,
            "exitCode": error.exit_code,
            "findings": getattr(error, "findings", []),
        },
    }
