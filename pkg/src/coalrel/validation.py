"""Axiom reports and error types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field


class MalformedError(ValueError):
    """Structure maps with inconsistent shapes, or otherwise unusable input."""


class InvalidStructureError(ValueError):
    """An axiom that an operation requires as a precondition does not hold."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"{report.subject}: failed {', '.join(report.failed)}")


class InvariantBreach(RuntimeError):
    """A result that theory guarantees turned out wrong; indicates a bug."""


@dataclass
class ValidationReport:
    """Outcome of checking a list of named identities.

    ``checks`` preserves insertion order; ``notes`` carries a human-readable
    explanation for selected checks (typically a violating vector).
    """

    subject: str
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def __bool__(self) -> bool:
        return self.valid

    def require(self) -> None:
        if not self.valid:
            raise InvalidStructureError(self)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "valid": self.valid,
            "checks": dict(self.checks),
            "notes": dict(self.notes),
        }
