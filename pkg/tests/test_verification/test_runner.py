"""
Tests for verification reports, the case queue and the suite runner.
"""

import json

import pytest

from src.verification.report import VerifyReport, merge_reports
from src.verification.runner import CaseQueue, CaseStatus, SuiteRunner


def passing(name: str, count: int = 1):
    def run():
        report = VerifyReport(name)
        for _ in range(count):
            report.record(True)
        return report
    return run


@pytest.mark.unit
class TestVerifyReport:
    """Test counting, failures and merging."""

    def test_record_keeps_failures_only(self):
        """Test that passing cases are counted but not stored."""
        report = VerifyReport("demo")
        assert report.record(True, case=1)
        assert not report.record(False, case=2, lam=(2, 1, 0))
        assert report.cases_run == 2
        assert report.failures == [{"suite": "demo", "case": 2, "lam": [2, 1, 0]}]
        assert not report.ok

    def test_merge(self):
        """Test that merged reports add up cases and failures."""
        a, b = VerifyReport("a"), VerifyReport("b")
        a.record(True)
        b.record(False, case="x")
        total = merge_reports("all", [a, b])
        assert total.suite == "all"
        assert total.cases_run == 2
        assert len(total.failures) == 1

    def test_json_and_render(self):
        """Test the JSON summary and the text rendering."""
        report = VerifyReport("demo")
        report.record(True)
        data = report.to_json_dict()
        assert data == {"suite": "demo", "cases_run": 1, "failures": [], "ok": True, "observations": []}
        assert "wall_time" in report.to_json_dict(include_time=True)
        assert report.render() == "demo: 1 cases, OK"
        json.dumps(data)

    def test_observations_do_not_fail(self):
        """Test that a noted statement is reported and merged but leaves ok set."""
        report = VerifyReport("demo")
        report.record(True)
        assert report.observe(True, check="quiet")
        assert not report.observe(False, check="noted", value=2)
        assert report.ok
        assert report.observations == [{"suite": "demo", "check": "noted", "value": 2}]
        assert report.render().splitlines()[0] == "demo: 1 cases, OK, 1 observed"
        merged = merge_reports("all", [report, VerifyReport("other")])
        assert merged.ok
        assert len(merged.observations) == 1
        assert merged.to_json_dict()["observations"] == report.observations


@pytest.mark.unit
class TestCaseQueue:
    """Test claiming and marking cases."""

    def test_cases_are_claimed_in_order(self):
        """Test that get_next_case returns queued cases first to last."""
        queue = CaseQueue()
        queue.add_case("first", passing("s"))
        queue.add_case("second", passing("s"), n=3)
        assert queue.size == 2
        assert queue.get_next_case().name == "first"
        assert queue.get_next_case().params == {"n": 3}
        assert queue.get_next_case() is None
        assert queue.count_by_status(CaseStatus.RUNNING) == 2

    def test_snapshot_is_a_copy(self):
        """Test that snapshots do not change with the queue."""
        queue = CaseQueue()
        case = queue.add_case("only", passing("s"))
        snapshot = queue.get_items_snapshot()
        queue.mark_failed(case.index, "boom")
        assert snapshot[0].status == CaseStatus.QUEUED
        assert queue.get_items_snapshot()[0].error == "boom"


@pytest.mark.unit
class TestSuiteRunner:
    """Test running queues with one and several workers."""

    @pytest.mark.parametrize("workers", [1, 2])
    def test_reports_are_merged(self, workers):
        """Test that every case's checks end up in the suite report."""
        queue = CaseQueue()
        for k in range(5):
            queue.add_case(f"case {k}", passing("s", count=k + 1))
        report = SuiteRunner(workers=workers, show_progress=False).run("s", queue)
        assert report.cases_run == 15
        assert report.ok

    def test_raising_case_becomes_failure(self):
        """Test that an exception inside a case is reported, not raised."""
        def broken():
            raise ValueError("no")

        queue = CaseQueue()
        queue.add_case("good", passing("s"))
        queue.add_case("bad", broken, lam=(1, 0))
        report = SuiteRunner(workers=2, show_progress=False).run("s", queue)
        assert report.cases_run == 2
        assert len(report.failures) == 1
        failure = report.failures[0]
        assert failure["case"] == "bad"
        assert failure["error"] == "ValueError: no"
        assert failure["params"] == {"lam": [1, 0]}
