from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Any
from typing import Optional

from diffmc.config.constants import CONFIG_PRIORITY
from diffmc.config.constants import DEFAULT_CONFIG_FILE
from diffmc.exceptions import ConfigError
from diffmc.exceptions import ConfigExistsError

if TYPE_CHECKING:
    from diffmc.config.model import Config

logger = logging.getLogger(__name__)


def load_config_toml(filename: Path) -> dict[str, Any]:
    """Load a TOML configuration file."""
    try:
        import tomllib
    except ImportError:
        import tomli as tomllib

    try:
        return tomllib.loads(filename.read_text())
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"Error decoding TOML file {filename}: {e}") from e
    except OSError as e:
        raise ConfigError(f"Error reading TOML file {filename}: {e}") from e


def find_config(
    filename: Optional[Path] = None,
    priority: tuple[Path, ...] = CONFIG_PRIORITY,
) -> Optional[Path]:
    """Return the first existing config file.

    A user supplied file takes precedence over the default locations.
    """
    filename_prio = list(priority)
    if filename:
        filename_prio.insert(0, filename)
    for fp in filename_prio:
        if fp.exists():
            logger.debug("found config %r", fp)
            return fp
    return None


def get_config(filename: Optional[Path] = None) -> Config:
    """Get a configuration object.

    Args:
        filename (Optional[Path], optional): An optional user supplied file. Defaults to None.

    Returns:
        Config: Config object loaded from file, or the sample config.
    """
    from diffmc.config.model import Config

    return Config.from_file(filename)


def init_config(
    config: Optional[Config] = None,
    config_file: Optional[Path] = None,
    *,
    overwrite: bool = False,
) -> Config:
    """Create required directories and a config object bound to `config_file`."""
    from diffmc.config.model import Config
    from diffmc.dirs import init_directories

    init_directories()

    if config_file is None:
        config_file = DEFAULT_CONFIG_FILE
    if config_file.exists() and not overwrite:
        raise ConfigExistsError(f"File {config_file} already exists")

    if not config:
        config = Config.sample_config()
    config.config_path = config_file
    return config
