"""
Exception hierarchy for lascoux_gz.
Every domain error derives from LascouxError so the CLI can map it to an exit code.
"""

import logging
from typing import Sequence, Tuple

logger = logging.getLogger(__name__)


class LascouxError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class DimensionError(LascouxError, ValueError):
    """Mismatched variable count, permutation degree or pattern shape."""

    exit_code = 2


class IndexRangeError(DimensionError):
    """A generator index outside 1..n-1."""


class InvalidPartitionError(LascouxError, ValueError):
    """Parts are negative or not weakly decreasing."""

    exit_code = 2


class UsageError(LascouxError):
    """Malformed command-line input."""

    exit_code = 2


class PreconditionError(LascouxError):
    """An operation was called on an input outside its documented domain."""


class MoveNotApplicableError(PreconditionError):
    """The local configuration required by an edge move is absent."""


class PointOutsidePolytopeError(LascouxError):
    """A rational point does not lie in GZ(lambda)."""


class ReconstructionError(LascouxError):
    """A circle set admits no efficient enhancement."""


class ExactDivisionError(LascouxError, AssertionError):
    """A divided-difference numerator was not divisible. Always a bug."""

    exit_code = 3


def check_index(i: int, n: int) -> None:
    """Raise IndexRangeError unless 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise IndexRangeError(f"Generator index {i} out of range 1..{n - 1}")


def check_same_n(n1: int, n2: int, what: str = "polynomial") -> None:
    if n1 != n2:
        raise DimensionError(f"Mismatched {what} sizes: {n1} != {n2}")


def check_partition(lam: Sequence[int]) -> Tuple[int, ...]:
    """Return lam as a tuple; raise InvalidPartitionError unless weakly decreasing and nonnegative."""
    lam = tuple(int(part) for part in lam)
    if not lam:
        raise InvalidPartitionError("A partition needs at least one part")
    if any(part < 0 for part in lam):
        raise InvalidPartitionError(f"Negative part in {lam}")
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise InvalidPartitionError(f"{lam} is not weakly decreasing")
    return lam


def exit_code_for(error: BaseException) -> int:
    """Exit code the CLI reports for an exception."""
    if isinstance(error, LascouxError):
        return error.exit_code
    return 3


def describe_error(error: BaseException) -> Tuple[int, str]:
    """Return (exit code, one-line message) for a failure."""
    code = exit_code_for(error)
    message = f"{type(error).__name__}: {error}"
    if code == 3:
        logger.error(f"Internal error: {message}", exc_info=error)
    return code, message
