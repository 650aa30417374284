"""Logging setup.

All diffmc modules log through children of the `diffmc` logger. Records go
to one root handler (a file, stderr or nowhere) chosen by `LoggingConfig`.
Rich markup in messages is stripped before formatting, and every record
carries the name of the running subcommand.
"""

from __future__ import annotations

import collections
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Literal
from typing import Optional

if TYPE_CHECKING:
    from diffmc.config.model import LoggingConfig

# must match the package name so `getLogger(__name__)` loggers inherit it
logger = logging.getLogger("diffmc")

DEFAULT_FORMAT = (
    "%(asctime)s [%(name)s][%(command)s][%(levelname)s]"
    "[%(filename)s:%(lineno)d %(funcName)s]: %(message)s"
)

LogLevelStr = Literal["DEBUG", "INFO", "WARN", "WARNING", "ERROR", "CRITICAL", "FATAL"]

LOG_LEVELS: dict[str, int] = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARN": logging.WARNING,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
    "FATAL": logging.CRITICAL,
}


def get_log_level(level: LogLevelStr) -> int:
    return LOG_LEVELS.get(level, logging.NOTSET)


class CommandFilter(logging.Filter):
    """Stamps the running subcommand on every record."""

    def __init__(self, command: str) -> None:
        super().__init__()
        self.command = command

    def filter(self, record: logging.LogRecord) -> Literal[True]:
        record.command = self.command
        return True


class SafeRecord(logging.LogRecord):
    """Returns None for fields the record does not have, e.g. `command`
    before a subcommand runs."""

    def __init__(self, record: logging.LogRecord):
        self.__dict__ = collections.defaultdict(lambda: None, record.__dict__)


class SafeFormatter(logging.Formatter):
    """Formats `SafeRecord`s with rich markup removed from the message."""

    def format(self, record: logging.LogRecord) -> str:
        from diffmc.utils.rich import get_text

        record = SafeRecord(record)
        # get_text must not log here
        record.msg = get_text(str(record.msg), log=False).plain
        return super().format(record)


def add_command(command: str) -> None:
    """Record `command` as the running subcommand on all root handlers."""
    # filters on loggers are not inherited by children; handlers are shared
    for handler in logging.getLogger().handlers:
        existing = [f for f in handler.filters if isinstance(f, CommandFilter)]
        if existing:
            existing[0].command = command
        else:
            handler.addFilter(CommandFilter(command))


def _file_handler(filename: Path) -> logging.Handler:
    """FileHandler for `filename`, or a stderr handler if it cannot be opened."""
    from diffmc.utils.fs import mkdir_if_not_exists

    try:
        mkdir_if_not_exists(filename.parent)
        return logging.FileHandler(filename)
    except Exception as e:
        from diffmc.output.console import error

        error(f"Could not open log file {filename} for writing: {e}", log=False)
        return logging.StreamHandler()


def configure_logging(config: Optional[LoggingConfig] = None) -> None:
    """Replace the root handler according to `config`.

    Without a config only warnings and errors are written, to stderr.
    """
    if not config:
        from diffmc.config.model import LoggingConfig

        config = LoggingConfig(log_file=None, log_level="WARNING")

    handler: logging.Handler
    if not config.enabled:
        handler = logging.NullHandler()
    elif config.log_file:
        handler = _file_handler(config.log_file)
    else:
        handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(SafeFormatter(fmt=DEFAULT_FORMAT))

    level = get_log_level(config.log_level)
    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(level)
    logger.setLevel(level)
