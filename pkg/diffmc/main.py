from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import typer

from diffmc.__about__ import __version__
from diffmc.app import app
from diffmc.config.constants import OutputFormat
from diffmc.config.utils import get_config
from diffmc.logs import add_command
from diffmc.logs import configure_logging
from diffmc.logs import logger
from diffmc.state import get_state


def version_callback(value: bool):
    if value:
        print(f"diffmc version {__version__}")
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main_callback(
    ctx: typer.Context,
    config_file: Optional[Path] = typer.Option(
        None,
        "--config",
        "-c",
        help="Alternate configuration file to use.",
        show_default=False,
    ),
    output_format: Optional[OutputFormat] = typer.Option(
        None,
        "--format",
        "-o",
        help="Output format of command results.",
        case_sensitive=False,
        show_default=False,
    ),
    pretty: bool = typer.Option(
        False,
        "--pretty",
        help="Render results as tables. Same as [option]--format table[/].",
    ),
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        help="Show the version of diffmc and exit.",
        is_eager=True,
        callback=version_callback,
    ),
) -> None:
    # Don't run callback if --help is passed in
    # https://github.com/tiangolo/typer/issues/55
    if "--help" in sys.argv:
        return

    state = get_state()
    if not should_skip_configuration(ctx) and (
        config_file is not None or not state.is_config_loaded
    ):
        state.config = get_config(config_file)

    # Overrides are applied on top of whatever config is active
    if output_format is not None:
        state.config.app.output.format = output_format
    if pretty:
        state.config.app.output.format = OutputFormat.TABLE

    if ctx.invoked_subcommand is not None:
        add_command(ctx.invoked_subcommand)
    logger.debug("diffmc started.")


def should_skip_configuration(ctx: typer.Context) -> bool:
    """Check if the command should skip loading the configuration file."""
    return ctx.invoked_subcommand in [
        "sample_config",
        "show_dirs",
        "init",
    ]


def main() -> int:
    """Main entry point for the CLI."""
    try:
        configure_logging()
        app()
    except Exception as e:
        from diffmc.exceptions import handle_exception

        handle_exception(e)
    finally:
        logger.debug("diffmc stopped.")
    return 0


if __name__ == "__main__":
    main()
