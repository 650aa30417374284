from __future__ import annotations

import logging
from pathlib import Path

from strenum import StrEnum

from diffmc.dirs import CONFIG_DIR
from diffmc.dirs import LOGS_DIR
from diffmc.dirs import SITE_CONFIG_DIR

logger = logging.getLogger("diffmc.config")

# Config file basename
CONFIG_FILENAME = "diffmc.toml"
DEFAULT_CONFIG_FILE = CONFIG_DIR / CONFIG_FILENAME


CONFIG_PRIORITY = (
    Path() / CONFIG_FILENAME,  # current directory
    DEFAULT_CONFIG_FILE,  # local config directory
    SITE_CONFIG_DIR / CONFIG_FILENAME,  # system config directory
)


LOG_FILE = LOGS_DIR / "diffmc.log"

DEFAULT_MAX_FULL_TREE_POSITIONS = 10**7
"""Largest n**q a full evaluation tree may have."""

DEFAULT_CHECK_SEED = 20240611
"""Seed for the random graphs drawn by check suites."""


class OutputFormat(StrEnum):
    JSON = "json"
    """JSON-serialized output."""

    TABLE = "table"
    """Rich terminal table output."""


class Engine(StrEnum):
    """Model checking engines."""

    BRUTE = "brute"
    """Recursive evaluation of the formula."""

    FULLTREE = "fulltree"
    """All n**q assignments of the prenex form, bounded by the size guard."""

    DIFFTREE = "difftree"
    """Reduced evaluation tree over differential game representatives."""

    DIFFLOCAL = "difflocal"
    """As difftree, deciding games inside differential neighbourhoods."""


class RepresentativeMode(StrEnum):
    """How representatives are picked from a relation graph."""

    INDEPENDENT = "independent"
    """Greedy maximal independent set."""

    COMPONENTS = "components"
    """Smallest vertex of every connected component."""
