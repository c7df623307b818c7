"""
Checks that the cells of the enhanced patterns decompose GZ(lambda).
"""

import logging
import time
from typing import Sequence

from src.cells.constraints import cell_constraints
from src.cells.location import closure_patterns, point_to_pattern
from src.enhanced.enumeration import enumerate_all
from src.enhanced.patterns import rank
from src.gz.patterns import enumerate_gz_patterns, grid_points
from src.utils.error_handler import check_partition
from src.verification.report import VerifyReport

logger = logging.getLogger(__name__)


def euler_characteristic(lam: Sequence[int]) -> int:
    """Sum of (-1)^rank over all enhanced patterns."""
    return sum((-1) ** rank(p) for p in enumerate_all(lam))


def verify_cellular(lam: Sequence[int], denominator: int = 2, check_closure: bool = True) -> VerifyReport:
    """Every grid point lies in exactly one cell, the located one.

    Also checks that rank-0 cells are the integer points, that the located
    cell uniquely minimizes rank among the cells whose closure holds the
    point, and that the Euler characteristic is 1.
    """
    lam = check_partition(lam)
    started = time.perf_counter()
    report = VerifyReport("cellular")
    patterns = enumerate_all(lam)
    systems = [(p, cell_constraints(p, lam)) for p in patterns]

    zero_cells = sorted(p.base.rows for p in patterns if rank(p) == 0)
    integer_points = sorted(z.rows for z in enumerate_gz_patterns(lam))
    report.record(zero_cells == integer_points, check="zero_cells", lam=lam,
                  zero_cells=len(zero_cells), integer_points=len(integer_points))

    for p in grid_points(lam, denominator):
        holders = [pattern for pattern, system in systems if system.contains(p)]
        located = point_to_pattern(lam, p)
        report.record(len(holders) == 1 and holders[0] == located, check="unique_cell",
                      lam=lam, point=p, holders=holders, located=located)
        if check_closure:
            closure = closure_patterns(lam, p)
            others = [q for q in closure if q != located]
            report.record(located in closure and all(rank(q) > rank(located) for q in others),
                          check="closure_order", lam=lam, point=p, located=located)

    chi = euler_characteristic(lam)
    report.record(chi == 1, check="euler_characteristic", lam=lam, value=chi)
    report.wall_time = time.perf_counter() - started
    logger.info(f"Cellular check {lam}, 1/{denominator}: {report.cases_run} cases, {len(report.failures)} failures")
    return report
