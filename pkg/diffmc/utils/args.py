"""Utilities for parsing and validating command-line arguments."""

from __future__ import annotations

import logging
from typing import Optional

from diffmc.exceptions import InputError

logger = logging.getLogger(__name__)


def parse_int_arg(arg: str) -> int:
    """Convert string to int."""
    try:
        return int(arg.strip())
    except ValueError as e:
        raise InputError(f"Invalid integer value: {arg}") from e


def parse_list_arg(arg: Optional[str], *, keep_empty: bool = False) -> list[str]:
    """Convert comma-separated string to list."""
    args = arg.strip().split(",") if arg else []
    if not keep_empty:
        args = [a.strip() for a in args if a.strip()]
    return args


def parse_int_list_arg(arg: Optional[str]) -> list[int]:
    """Convert comma-separated string of ints to list of ints.

    Used for vertex tuples: `0,3` is the tuple (0, 3), the empty string
    is the empty tuple.
    """
    # never try to parse empty strings as ints
    args = parse_list_arg(arg, keep_empty=False)
    return [parse_int_arg(a) for a in args]
