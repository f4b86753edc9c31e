"""Pass/fail reports shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    vacuous: bool = False

    def to_struct(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        if self.vacuous:
            d["vacuous"] = True
        return d


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "", vacuous: bool = False) -> Check:
        c = Check(name, bool(passed), detail, vacuous)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        for c in self.checks:
            tag = "SKIP" if c.vacuous else ("PASS" if c.passed else "FAIL")
            line = f"  [{tag}] {c.name}"
            if c.detail and (not c.passed or c.vacuous):
                line += f"  -- {c.detail}"
            lines.append(line)
        n_ok = sum(c.passed for c in self.checks)
        lines.append(f"  {n_ok}/{len(self.checks)} passed")
        return "\n".join(lines)

    def to_struct(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "info": self.info,
            "checks": [c.to_struct() for c in self.checks],
        }

    def __str__(self):
        return self.to_text()
