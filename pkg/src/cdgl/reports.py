"""Report containers shared by the validation and verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckFailure:
    kind: str
    witness: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witness": self.witness, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks_run: int = 0
    failures: list[CheckFailure] = field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, kind: str, witness: str, detail: str = "") -> None:
        self.checks_run += 1
        if not passed:
            self.failures.append(CheckFailure(kind, witness, detail))

    def merge(self, other: "SuiteReport") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "checks_run": self.checks_run,
            "failures": [f.to_dict() for f in self.failures],
            "ok": self.ok,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return "%-28s %5d checks  %3d failures  [%s]" % (
            self.suite,
            self.checks_run,
            len(self.failures),
            status,
        )
