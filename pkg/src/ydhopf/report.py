"""Ordered assertion reports shared by the checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    """First entry where two sides of an identity disagree."""

    row: tuple[int, ...]
    col: tuple[int, ...]
    lhs: int
    rhs: int

    def as_dict(self) -> dict:
        return {"row": list(self.row), "col": list(self.col), "lhs": self.lhs, "rhs": self.rhs}

    def __str__(self):
        return f"entry row={self.row} col={self.col}: lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class Assertion:
    name: str
    anchor: str
    passed: bool
    witness: Witness | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "anchor": self.anchor, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        if self.detail:
            out["detail"] = self.detail
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.anchor}"
        if self.witness is not None:
            text += f"\n        witness {self.witness}"
        if self.detail:
            text += f"\n        {self.detail}"
        return text


@dataclass
class Report:
    title: str
    assertions: list[Assertion] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def add(self, name: str, anchor: str, passed: bool, witness: Witness | None = None,
            detail: str = "") -> Assertion:
        a = Assertion(name, anchor, bool(passed), witness, detail)
        self.assertions.append(a)
        return a

    def extend(self, other: Report, prefix: str = "") -> None:
        for a in other.assertions:
            self.assertions.append(Assertion(prefix + a.name, a.anchor, a.passed, a.witness, a.detail))

    def __getitem__(self, name: str) -> Assertion:
        for a in self.assertions:
            if a.name == name:
                return a
        raise KeyError(name)

    def names(self) -> list[str]:
        return [a.name for a in self.assertions]

    def failures(self) -> list[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "assertions": [a.as_dict() for a in self.assertions],
            "overall": self.passed,
            "metadata": dict(self.metadata),
        }

    def text(self) -> str:
        lines = [self.title]
        lines += [a.line() for a in self.assertions]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}"
                     f" ({sum(a.passed for a in self.assertions)}/{len(self.assertions)})")
        return "\n".join(lines)
