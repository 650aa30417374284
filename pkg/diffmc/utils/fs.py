"""Filesystem utilities."""

from __future__ import annotations

import logging
from pathlib import Path

from diffmc.exceptions import DiffMCFileError
from diffmc.exceptions import DiffMCFileNotFoundError

logger = logging.getLogger(__name__)


def read_file(file: Path) -> str:
    """Attempts to read the contents of a file."""
    if not file.exists():
        raise DiffMCFileNotFoundError(f"File {file} does not exist")
    if not file.is_file():
        raise DiffMCFileError(f"{file} is not a file")
    try:
        return file.read_text(encoding="utf-8")
    except OSError as e:
        raise DiffMCFileError(f"Unable to read file {file}") from e


def write_file(file: Path, content: str) -> None:
    """Write text to a file, creating parent directories."""
    mkdir_if_not_exists(file.parent)
    try:
        file.write_text(content, encoding="utf-8")
    except OSError as e:
        raise DiffMCFileError(f"Unable to write file {file}: {e}") from e
    else:
        logger.info("Wrote %s", file)


def mkdir_if_not_exists(path: Path) -> None:
    """Create a directory for a given path if it does not exist."""
    if path.exists():
        return
    try:
        path.mkdir(parents=True, exist_ok=True)
    except Exception as e:
        raise DiffMCFileError(f"Failed to create directory {path}: {e}") from e
    else:
        logger.info("Created directory: %s", path)
