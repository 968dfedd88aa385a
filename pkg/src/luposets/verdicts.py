"""Verdict/witness plumbing returned by every decision procedure."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """A falsifying assignment for a universally quantified property.

    ``assignment`` maps variable names to rendered values: element labels,
    or ``{a,b}``-style strings when a checker quantifies over subsets.
    ``note`` is a short human-readable reason tag.
    """

    assignment: dict[str, str] = field(default_factory=dict)
    note: str = ""

    def render(self) -> str:
        parts = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        if self.note:
            return f"{parts} ({self.note})" if parts else f"({self.note})"
        return parts


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: either the property holds, or it fails with
    a witness."""

    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def fail(cls, note: str = "", **assignment: str) -> "Verdict":
        return cls(False, Witness(dict(assignment), note))

    def render(self) -> str:
        if self.holds:
            return "holds"
        return f"fails: {self.witness.render()}" if self.witness else "fails"
