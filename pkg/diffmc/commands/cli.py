"""Commands that interact with the application itself."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from diffmc.app import Example
from diffmc.app import app
from diffmc.dirs import DIRECTORIES
from diffmc.exceptions import ConfigError
from diffmc.exceptions import ConfigExistsError
from diffmc.output.console import info
from diffmc.output.console import print_path
from diffmc.output.console import print_toml
from diffmc.output.console import warning
from diffmc.output.render import render_result

HELP_PANEL = "CLI"


@app.command("init", rich_help_panel=HELP_PANEL)
def init(
    ctx: typer.Context,
    config_file: Optional[Path] = typer.Option(
        None, "--config-file", "-c", help="Location of the config file."
    ),
    overwrite: bool = typer.Option(
        False, "--overwrite", help="Overwrite existing config"
    ),
) -> None:
    """Create and initialize config file."""
    from diffmc.config.utils import init_config

    try:
        config = init_config(config_file=config_file, overwrite=overwrite)
    except ConfigExistsError as e:
        raise ConfigError(f"{e}. Use [option]--overwrite[/] to overwrite it") from e
    assert config.config_path is not None
    config.dump_to_file(config.config_path)
    info(f"Configuration file created: {config.config_path}")
    app.state.config = config


@app.command("sample_config", rich_help_panel=HELP_PANEL)
def sample_config(ctx: typer.Context) -> None:
    """Print a sample configuration file."""
    from diffmc.config.model import Config

    print_toml(Config.sample_config().as_toml())


@app.command(
    "show_config",
    rich_help_panel=HELP_PANEL,
    examples=[
        Example("Show the active configuration", "diffmc show_config"),
        Example("Show the path of the loaded file", "diffmc show_config --path"),
    ],
)
def show_config(
    ctx: typer.Context,
    path: bool = typer.Option(
        False, "--path", help="Show the path of the loaded configuration file."
    ),
) -> None:
    """Show the active configuration."""
    config = app.state.config
    if path:
        if config.config_path is None:
            warning("No configuration file loaded; using built-in defaults.")
            return
        print_path(config.config_path)
        return
    print_toml(config.as_toml())
    if config.config_path:
        info(f"Config file: {config.config_path.absolute()}")


@app.command("show_dirs", rich_help_panel=HELP_PANEL)
def show_dirs(ctx: typer.Context) -> None:
    """Show the default directories used by the application."""
    from diffmc.commands.results.cli import DirectoriesResult

    result = DirectoriesResult.from_paths(DIRECTORIES)
    render_result(result)
