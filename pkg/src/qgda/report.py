from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        s = f"[{self.status.upper():4}] {self.name}"
        if self.detail:
            s += f"  ({self.detail})"
        if self.witness:
            s += f"\n         witness: {self.witness}"
        return s


@dataclass
class Report:
    suite: str
    algebra: str
    seed: int | None
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        head = f"suite {self.suite} on {self.algebra} (seed {self.seed})"
        n_fail = len(self.failures())
        tail = "all checks passed" if self.ok else f"{n_fail} check(s) failed"
        return "\n".join([head] + [c.line() for c in self.checks] + [tail])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [asdict(c) for c in self.checks],
        }


def forall(name: str, cases: Iterable, test: Callable[[object], str | None], detail: str = "") -> Check:
    """Run ``test`` on every case; ``test`` returns None on success or a witness string."""
    count = 0
    try:
        for case in cases:
            count += 1
            witness = test(case)
            if witness is not None:
                return Check(name, FAIL, f"case {count}", witness)
    except Exception as exc:  # a crash inside a law is a failed law, with the exception as witness
        return Check(name, FAIL, f"case {count} raised", f"{type(exc).__name__}: {exc}")
    return Check(name, PASS, detail or f"{count} cases")


def expect(name: str, ok: bool, detail: str = "", witness: str | None = None) -> Check:
    return Check(name, PASS if ok else FAIL, detail, None if ok else witness)
