from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any


@dataclass
class TrialOutcome:
    """Result of one trial: ``status`` is pass, fail or skip."""

    status: str = "pass"
    checks: Counter = field(default_factory=Counter)
    failures: list[dict[str, Any]] = field(default_factory=list)

    def check(self, name: str, ok: bool, *, expected: Any = None, got: Any = None,
              space_text: str = "", trial: int | None = None) -> bool:
        self.checks[name] += 1
        if not ok:
            self.status = "fail"
            self.failures.append({
                "check": name,
                "trial": trial,
                "expected": str(expected),
                "got": str(got),
                "space_text": space_text,
            })
        return ok

    def skip(self, reason: str, *, space_text: str = "", trial: int | None = None) -> None:
        if self.status != "fail":
            self.status = "skip"
        self.checks["skipped:" + reason] += 1
        self.failures.append({"check": "skip:" + reason, "trial": trial, "expected": "",
                              "got": "", "space_text": space_text})


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any]
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    checks: Counter = field(default_factory=Counter)

    @property
    def verdict(self) -> str:
        return "PASS" if self.failed == 0 else "FAIL"

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped

    def add(self, outcome: TrialOutcome) -> None:
        if outcome.status == "pass":
            self.passed += 1
        elif outcome.status == "fail":
            self.failed += 1
        else:
            self.skipped += 1
        self.checks.update(outcome.checks)
        self.failures.extend(outcome.failures)

    def merge(self, other: VerificationReport) -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        self.checks.update(other.checks)
        self.failures.extend(other.failures)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "pass": self.passed,
            "fail": self.failed,
            "skip": self.skipped,
            "verdict": self.verdict,
            "checks": dict(sorted(self.checks.items())),
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"[{self.verdict}] {self.suite} ({params}): "
                 f"pass={self.passed} fail={self.failed} skip={self.skipped}"]
        for name, count in sorted(self.checks.items()):
            lines.append(f"    {name}: {count}")
        for f in self.failures:
            lines.append(f"    ! {f['check']} trial={f['trial']} expected={f['expected']} got={f['got']}")
            if f["space_text"]:
                lines.extend("      " + line for line in f["space_text"].splitlines())
        return "\n".join(lines)
