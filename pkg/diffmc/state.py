"""Process-wide application state.

The main callback sets the active configuration once; commands and library
code read it through `get_state()`. Local imports live inside methods so
this module can be imported from anywhere without cycles.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING
from typing import Any
from typing import Optional

from typing_extensions import Self

if TYPE_CHECKING:
    from diffmc.config.model import Config

logger = logging.getLogger(__name__)


class State:
    """Application state singleton."""

    _instance = None

    def __new__(cls, *args: Any, **kwargs: Any) -> Self:
        if cls._instance is None:
            cls._instance = super().__new__(cls, *args, **kwargs)
        return cls._instance

    _config: Optional[Config] = None
    _config_loaded: bool = False

    @property
    def config(self) -> Config:
        """Active configuration. The sample config until one is set."""
        if self._config is None:
            from diffmc.config.model import Config

            logger.debug("Using sample config as fallback.", stacklevel=2)
            self._config = Config.sample_config()
        return self._config

    @config.setter
    def config(self, config: Config) -> None:
        """Activate `config` and reconfigure logging and consoles from it."""
        from diffmc.logs import configure_logging
        from diffmc.output.console import configure_console

        self._config = config
        configure_logging(config.logging)
        configure_console(config)
        self._config_loaded = config.config_path is not None

    @property
    def is_config_loaded(self) -> bool:
        """The active configuration was read from a file."""
        return self._config_loaded

    @property
    def threads(self) -> int:
        """Worker threads for pairwise relation and census work."""
        return self.config.engine.threads


def get_state() -> State:
    return State()
