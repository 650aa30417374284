from __future__ import annotations

import logging
from pathlib import Path
from typing import Any
from typing import Optional

from pydantic import Field
from pydantic import ValidationError
from pydantic import field_validator

from diffmc.config.base import BaseModel
from diffmc.config.constants import DEFAULT_CHECK_SEED
from diffmc.config.constants import DEFAULT_MAX_FULL_TREE_POSITIONS
from diffmc.config.constants import LOG_FILE
from diffmc.config.constants import Engine
from diffmc.config.constants import OutputFormat
from diffmc.config.constants import RepresentativeMode
from diffmc.config.utils import find_config
from diffmc.config.utils import load_config_toml
from diffmc.exceptions import ConfigError
from diffmc.logs import LogLevelStr
from diffmc.utils.fs import mkdir_if_not_exists

logger = logging.getLogger("diffmc.config")


class OutputConfig(BaseModel):
    """Configuration for output formatting."""

    format: OutputFormat = Field(
        default=OutputFormat.JSON,
        description="Default output format.",
    )
    color: bool = Field(
        default=True,
        description="Use colors in terminal output.",
    )

    @field_validator("format", mode="before")
    @classmethod
    def _ignore_enum_case(cls, v: Any) -> Any:
        """Ignore case when validating enum value."""
        if isinstance(v, str):
            return v.lower()
        return v


class AppConfig(BaseModel):
    """Configuration for app defaults and behavior."""

    output: OutputConfig = Field(default_factory=OutputConfig)


class EngineConfig(BaseModel):
    """Configuration for the model checking engines."""

    default_engine: Engine = Field(
        default=Engine.DIFFTREE,
        description="Engine used by `mc` when none is given.",
    )
    representative_mode: RepresentativeMode = Field(
        default=RepresentativeMode.INDEPENDENT,
        description="How representatives are picked from the relation graph.",
    )
    max_full_tree_positions: int = Field(
        default=DEFAULT_MAX_FULL_TREE_POSITIONS,
        ge=1,
        description="Refuse to build full evaluation trees with more than n**q leaves.",
    )
    threads: int = Field(
        default=1,
        ge=1,
        description="Worker threads for pairwise relation and census computations.",
    )

    @field_validator("default_engine", "representative_mode", mode="before")
    @classmethod
    def _ignore_enum_case(cls, v: Any) -> Any:
        if isinstance(v, str):
            return v.lower()
        return v


class CheckConfig(BaseModel):
    """Configuration for the property check suites."""

    seed: int = Field(
        default=DEFAULT_CHECK_SEED,
        description="Seed for randomly drawn graphs.",
    )
    random_graphs: int = Field(
        default=100,
        ge=0,
        description="Number of random graphs drawn by suites that use them.",
    )
    random_sizes: list[int] = Field(
        default_factory=lambda: [6, 7, 8],
        description="Vertex counts random graphs are drawn with (round robin).",
    )
    edge_probability: float = Field(
        default=0.5,
        ge=0.0,
        le=1.0,
        description="Edge probability of random graphs.",
    )


class LoggingConfig(BaseModel):
    """Configuration for application logs."""

    enabled: bool = Field(
        default=True,
        description="Enable logging.",
    )
    log_level: LogLevelStr = Field(
        default="INFO",
        description="Log level.",
    )
    log_file: Optional[Path] = Field(
        default=LOG_FILE,
        description=(
            "File for storing logs. "
            "Can be set to an empty string to log to stderr."
        ),
    )

    @field_validator("log_file", mode="before")
    @classmethod
    def _empty_string_is_none(cls, v: Any) -> Any:
        """Passing in an empty string to `log_file` sets it to `None`,
        while omitting the option altogether sets it to the default.

        Examples:
        -------
        To get `LoggingConfig.log_file == None`:

        ```toml
        [logging]
        log_file = ""
        ```
        """
        if v == "":
            return None
        return v


class Config(BaseModel):
    """Configuration for the application."""

    app: AppConfig = Field(default_factory=AppConfig)
    engine: EngineConfig = Field(default_factory=EngineConfig)
    checks: CheckConfig = Field(default_factory=CheckConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    config_path: Optional[Path] = Field(default=None, exclude=True)

    @property
    def sample(self) -> bool:
        # No fields set means this is a sample config
        return not bool(self.model_fields_set)

    @classmethod
    def sample_config(cls) -> Config:
        """Get a sample configuration."""
        return cls()

    @classmethod
    def from_file(cls, filename: Optional[Path] = None) -> Config:
        """Load configuration from a file.

        Attempts to find a config file to load if none is specified.
        An explicitly given file must exist.
        """
        if filename and not filename.exists():
            raise ConfigError(f"Configuration file {filename} does not exist")
        fp = filename or find_config()
        if not fp:
            return cls.sample_config()
        return cls.from_toml_file(fp)

    @classmethod
    def from_toml_file(cls, filename: Path) -> Config:
        """Load configuration from a TOML file."""
        conf = load_config_toml(filename)
        try:
            return cls(**conf, config_path=filename)
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration file {filename}: {e}") from e
        except Exception as e:
            raise ConfigError(
                f"Failed to load configuration file {filename}: {e}"
            ) from e

    def as_toml(self) -> str:
        """Dump the configuration to a TOML string."""
        import tomli_w

        try:
            return tomli_w.dumps(self.model_dump(mode="json", exclude_none=True))
        except Exception as e:
            raise ConfigError(f"Failed to serialize configuration to TOML: {e}") from e

    def dump_to_file(self, filename: Path) -> None:
        """Dump the configuration to a TOML file."""
        try:
            mkdir_if_not_exists(filename.parent)
            filename.write_text(self.as_toml())
        except OSError as e:
            raise ConfigError(
                f"Failed to write configuration file {filename}: {e}"
            ) from e
