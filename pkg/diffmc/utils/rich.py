"""Utility functions for working with the Rich library."""

from __future__ import annotations

import logging
import re
from typing import TYPE_CHECKING

from rich.errors import MarkupError
from rich.text import Text

logger = logging.getLogger(__name__)

if TYPE_CHECKING:
    from rich.console import RenderableType

LABEL_ATOM = re.compile(r"\bL(\[[^\]\[]*\]\()")
"""`L[a](x)` in formula text. Rich would read `[a]` as a style tag."""


def escape_label_atoms(text: str) -> str:
    return LABEL_ATOM.sub(r"L\\\1", text)


def get_safe_renderable(renderable: RenderableType) -> RenderableType:
    """Ensure that the renderable can be rendered without raising an exception."""
    if isinstance(renderable, str):
        return get_text(renderable)
    return renderable


def get_text(text: str, *, log: bool = True) -> Text:
    """Interpret text as markup, keeping label atoms of formulas as they are.

    Falls back to plain text if the markup is invalid.
    """
    try:
        return Text.from_markup(escape_label_atoms(text))
    except MarkupError as e:
        # Never log while stripping markup from log records.
        if log:
            logger.debug("Markup error when rendering text: '%s': %s", text, e)
        return Text(text)
