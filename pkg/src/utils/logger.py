import sys
import logging
from pathlib import Path
from typing import Optional, Union

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
DEFAULT_LOG_DIR = Path.home() / ".lascoux_gz"
DEFAULT_LOG_FILE = DEFAULT_LOG_DIR / "lascoux_gz.log"


def setup_logging(log_file: Optional[Union[str, Path]] = None,
                  level: Union[str, int] = logging.INFO) -> Path:
    """Route all loggers to a single file.

    Args:
        log_file: Target file; defaults to ~/.lascoux_gz/lascoux_gz.log
        level: Logging level name or number

    Returns:
        Path of the log file in use
    """
    path = Path(log_file) if log_file else DEFAULT_LOG_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        filename=str(path),
        level=level,
        format=LOG_FORMAT,
        force=True
    )
    return path


def _log_uncaught_exception(exc_type, exc_value, exc_traceback):
    logging.getLogger(__name__).critical(
        "Uncaught exception",
        exc_info=(exc_type, exc_value, exc_traceback)
    )
    sys.__excepthook__(exc_type, exc_value, exc_traceback)


def install_excepthook() -> None:
    sys.excepthook = _log_uncaught_exception
