"""Platform directories for configuration, data and log files.

See <https://pypi.org/project/platformdirs/> for the locations on each platform.
"""

from __future__ import annotations

import logging

from platformdirs import PlatformDirs

from diffmc.__about__ import APP_NAME
from diffmc.__about__ import AUTHOR
from diffmc.exceptions import DiffMCFileError

logger = logging.getLogger(__name__)


_PLATFORM_DIR = PlatformDirs(APP_NAME, AUTHOR)

CONFIG_DIR = _PLATFORM_DIR.user_config_path
"""Directory for user configuration files."""

DATA_DIR = _PLATFORM_DIR.user_data_path
"""Directory for generated graphs and check reports."""

LOGS_DIR = _PLATFORM_DIR.user_log_path
"""Directory for log files."""

SITE_CONFIG_DIR = _PLATFORM_DIR.site_config_path
"""Directory for site-wide configuration files, i.e. `/etc/xdg/diffmc`.
Never created by us."""


def init_directories() -> None:
    """Create the user directories `init` writes to."""
    from diffmc.utils.fs import mkdir_if_not_exists

    for path in (CONFIG_DIR, LOGS_DIR):
        try:
            mkdir_if_not_exists(path)
        except DiffMCFileError as e:
            # logs can go to stderr, a config directory is required
            if path == CONFIG_DIR:
                raise
            logger.warning("%s", e)


DIRECTORIES = {
    "config": CONFIG_DIR,
    "data": DATA_DIR,
    "logs": LOGS_DIR,
    "siteconfig": SITE_CONFIG_DIR,
}
"""Directories listed by `show_dirs`, by name."""
