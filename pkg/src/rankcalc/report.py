"""Structured check reports: one line per check class."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class CheckLine:
    name: str
    instances: int
    violations: int
    note: str = ""

    def render(self) -> str:
        line = "check %s: instances %d, violations %d" % (
            self.name, self.instances, self.violations)
        if self.note:
            line += " (%s)" % self.note
        return line


@dataclass
class Report:
    title: str
    lines: List[CheckLine] = field(default_factory=list)

    def add(self, name, instances, note="", violations=0):
        self.lines.append(CheckLine(name, int(instances), int(violations), note))

    @property
    def ok(self) -> bool:
        return all(line.violations == 0 for line in self.lines)

    @property
    def total_violations(self) -> int:
        return sum(line.violations for line in self.lines)

    def extend(self, other: "Report"):
        self.lines.extend(other.lines)

    def render(self) -> str:
        body = "\n".join(line.render() for line in self.lines)
        verdict = "PASS" if self.ok else "FAIL"
        return "%s\n%s: %s (%d violations)" % (
            body, self.title, verdict, self.total_violations)

    def __str__(self):
        return self.render()
