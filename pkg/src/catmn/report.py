"""Validation reports: deterministic lists of axiom violations.

Validators in this package never raise on bad mathematics; they return a
report listing every violated axiom instance with enough names to find it.
An empty report means the artifact passed.  Reports are sorted so that the
rendered text is byte-identical run to run regardless of discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Violation:
    """One violated axiom instance.

    ``rule`` is a stable machine-readable tag, ``subject`` names the
    witnesses (objects or morphisms), ``detail`` is for humans.
    """

    rule: str
    subject: tuple[str, ...]
    detail: str

    def render(self) -> str:
        where = ", ".join(self.subject)
        return f"{self.rule} [{where}]: {self.detail}"


class ValidationReport:
    """Immutable, sorted collection of violations plus informational notes.

    Notes never affect emptiness; they record things like vacuously true
    implications.
    """

    __slots__ = ("violations", "notes")

    def __init__(self, violations=(), notes=()):
        self.violations: tuple[Violation, ...] = tuple(sorted(violations))
        self.notes: tuple[str, ...] = tuple(notes)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merged(self, *others: "ValidationReport") -> "ValidationReport":
        violations = list(self.violations)
        notes = list(self.notes)
        for other in others:
            violations.extend(other.violations)
            notes.extend(other.notes)
        return ValidationReport(violations, notes)

    def render(self) -> str:
        lines = [v.render() for v in self.violations]
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines) if lines else "ok"

    def __eq__(self, other):
        if not isinstance(other, ValidationReport):
            return NotImplemented
        return self.violations == other.violations and self.notes == other.notes

    def __repr__(self):
        return f"ValidationReport(violations={len(self.violations)}, notes={len(self.notes)})"
