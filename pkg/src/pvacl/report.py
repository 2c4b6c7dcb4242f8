"""Check results and the text/JSON reports built from them."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class CheckResult:
    name: str
    identity: str
    passed: bool
    cases: int = 0
    detail: str = ""


@dataclass
class Report:
    title: str
    config: dict = field(default_factory=dict)
    sections: list = field(default_factory=list)  # (heading, [CheckResult])

    def add(self, heading: str, results) -> None:
        self.sections.append((heading, list(results)))

    @property
    def passed(self) -> bool:
        return all(r.passed for _, rs in self.sections for r in rs)

    def to_text(self) -> str:
        lines = [f"# {self.title}"]
        for k in sorted(self.config):
            lines.append(f"{k}: {self.config[k]}")
        for heading, rs in self.sections:
            lines.append("")
            lines.append(f"## {heading}")
            for r in rs:
                status = "PASS" if r.passed else "FAIL"
                lines.append(f"[{status}] {r.name} -- {r.identity} ({r.cases} cases)")
                if r.detail:
                    lines.append(f"    counterexample: {r.detail}")
        lines.append("")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "title": self.title,
            "config": self.config,
            "passed": self.passed,
            "sections": [{"heading": h, "checks": [asdict(r) for r in rs]} for h, rs in self.sections],
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
