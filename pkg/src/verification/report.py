"""
Verification reports: cases run, failures with reproduction data, wall time.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

logger = logging.getLogger(__name__)


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0
    observations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, **details) -> bool:
        """Count one case; keep its details when it failed."""
        self.cases_run += 1
        if not passed:
            self.add_failure(**details)
        return passed

    def observe(self, holds: bool, **details) -> bool:
        """Note a statement that does not hold without failing the report."""
        if not holds:
            note = {"suite": self.suite}
            note.update({key: _jsonable(value) for key, value in details.items()})
            self.observations.append(note)
            logger.info(f"[{self.suite}] observed: {json.dumps(note, sort_keys=True)}")
        return holds

    def add_failure(self, **details) -> None:
        failure = {"suite": self.suite}
        failure.update({key: _jsonable(value) for key, value in details.items()})
        self.failures.append(failure)
        logger.warning(f"[{self.suite}] failure: {json.dumps(failure, sort_keys=True)}")

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        """Combine two reports; the suite name of self is kept unless it is empty."""
        return VerifyReport(
            suite=self.suite or other.suite,
            cases_run=self.cases_run + other.cases_run,
            failures=self.failures + other.failures,
            wall_time=self.wall_time + other.wall_time,
            observations=self.observations + other.observations,
        )

    def to_json_dict(self, include_time: bool = False) -> dict:
        data = {
            "suite": self.suite,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "ok": self.ok,
            "observations": self.observations,
        }
        if include_time:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def render(self) -> str:
        status = "OK" if self.ok else f"{len(self.failures)} FAILED"
        if self.observations:
            status += f", {len(self.observations)} observed"
        lines = [f"{self.suite}: {self.cases_run} cases, {status}"]
        for failure in self.failures:
            lines.append("  " + json.dumps(failure, sort_keys=True))
        for note in self.observations:
            lines.append("  observed: " + json.dumps(note, sort_keys=True))
        return "\n".join(lines)


def merge_reports(name: str, reports: Iterable[VerifyReport]) -> VerifyReport:
    total = VerifyReport(name)
    for report in reports:
        total = total.merge(report)
    return total


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json_dict"):
        return value.to_json_dict()
    if hasattr(value, "render"):
        return value.render()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (int, str, bool, float)) or value is None:
        return value
    return str(value)
