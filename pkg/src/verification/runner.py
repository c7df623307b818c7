from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional
import threading
import logging
import time

from tqdm import tqdm

from src.verification.report import VerifyReport, merge_reports

logger = logging.getLogger(__name__)


class CaseStatus(Enum):
    QUEUED = "queued"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class VerificationCase:
    index: int
    name: str
    run: Callable[[], VerifyReport]
    params: Dict[str, Any] = field(default_factory=dict)
    status: CaseStatus = CaseStatus.QUEUED
    report: Optional[VerifyReport] = None
    error: Optional[str] = None


class CaseQueue:
    def __init__(self):
        self._cases: List[VerificationCase] = []
        self._lock = threading.Lock()

    @property
    def size(self) -> int:
        with self._lock:
            return len(self._cases)

    def add_case(self, name: str, run: Callable[[], VerifyReport], **params) -> VerificationCase:
        with self._lock:
            case = VerificationCase(len(self._cases), name, run, dict(params))
            self._cases.append(case)
        logger.debug(f"Queued case {case.index}: {name} {params}")
        return case

    def get_next_case(self) -> Optional[VerificationCase]:
        """Claim the first queued case."""
        with self._lock:
            for case in self._cases:
                if case.status == CaseStatus.QUEUED:
                    case.status = CaseStatus.RUNNING
                    return case
        return None

    def mark_completed(self, index: int, report: VerifyReport):
        with self._lock:
            case = self._cases[index]
            case.status = CaseStatus.COMPLETED
            case.report = report

    def mark_failed(self, index: int, error: str):
        with self._lock:
            case = self._cases[index]
            case.status = CaseStatus.FAILED
            case.error = error

    def get_items_snapshot(self) -> List[VerificationCase]:
        """Copies of all cases, safe to read while workers update the queue."""
        with self._lock:
            return [replace(case) for case in self._cases]

    def count_by_status(self, *statuses: CaseStatus) -> int:
        with self._lock:
            return sum(1 for case in self._cases if case.status in statuses)


class SuiteRunner:
    """Drains a CaseQueue through a thread pool and merges the reports in case order."""

    def __init__(self, workers: int = 1, show_progress: bool = True):
        self.workers = max(1, int(workers))
        self.show_progress = show_progress

    def _work(self, queue: CaseQueue):
        case = queue.get_next_case()
        if case is None:
            return
        try:
            report = case.run()
            queue.mark_completed(case.index, report)
        except Exception as e:
            logger.error(f"Case {case.index} ({case.name}) raised: {e}", exc_info=True)
            queue.mark_failed(case.index, f"{type(e).__name__}: {e}")

    def run(self, suite: str, queue: CaseQueue) -> VerifyReport:
        started = time.perf_counter()
        total = queue.size
        logger.info(f"Suite {suite}: {total} cases on {self.workers} worker(s)")
        with tqdm(total=total, desc=suite, unit="case", disable=not self.show_progress,
                  leave=False) as bar:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(self._work, queue) for _ in range(total)]
                for future in as_completed(futures):
                    future.result()
                    bar.update(1)

        reports = []
        for case in queue.get_items_snapshot():
            if case.status == CaseStatus.COMPLETED:
                reports.append(case.report)
            else:
                crashed = VerifyReport(suite)
                crashed.record(False, case=case.name, params=case.params, error=case.error)
                reports.append(crashed)
        report = merge_reports(suite, reports)
        report.wall_time = time.perf_counter() - started
        logger.info(f"Suite {suite} finished: {report.cases_run} checks, {len(report.failures)} failures")
        return report
