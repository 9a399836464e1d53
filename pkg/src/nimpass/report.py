"""Verification report records shared by the verifier and the Nim solvers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    """One counterexample: re-parseable input expressions plus the mismatch."""

    inputs: dict[str, str]
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {
            "inputs": dict(self.inputs),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class VerificationReport:
    """Result of running one check over a stream of cases.

    ``cases`` counts the assertions actually performed; ``excluded`` counts
    cases a check skipped on purpose (and logged) because the claim does not
    apply to them. ``seed`` is set only for randomized runs.
    """

    theorem: str
    mode: str  # "exhaustive" | "random"
    cases: int
    failures: list[Failure] = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: int = 0
    excluded: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "mode": self.mode,
            "cases": self.cases,
            "excluded": self.excluded,
            "failures": [f.to_dict() for f in self.failures],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "passed": self.passed,
        }
