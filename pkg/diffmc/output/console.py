"""Rich consoles and the message helpers commands use to talk to the user.

Results go to stdout through `console`. Everything else (progress, warnings,
errors) goes to stderr and is logged as well.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import TYPE_CHECKING
from typing import Any
from typing import NoReturn
from typing import Optional

from rich.console import Console

from diffmc.logs import logger
from diffmc.output.style import RICH_THEME
from diffmc.output.style import Icon

if TYPE_CHECKING:
    from diffmc.config.model import Config

console = Console(theme=RICH_THEME)

err_console = Console(
    stderr=True,
    highlight=False,
    soft_wrap=True,
    theme=RICH_THEME,
)


RESERVED_EXTRA_KEYS = (
    "name",
    "level",
    "pathname",
    "lineno",
    "msg",
    "args",
    "exc_info",
    "func",
    "sinfo",
)
"""LogRecord attributes that `extra` must not overwrite."""


def get_extra_dict(**kwargs: Any) -> dict[str, Any]:
    """Suffix keys that collide with LogRecord attributes with `_`."""
    return {(f"{k}_" if k in RESERVED_EXTRA_KEYS else k): v for k, v in kwargs.items()}


def _report(
    level: int,
    message: str,
    markup: str,
    *,
    log: bool = True,
    exc_info: bool = False,
    **kwargs: Any,
) -> None:
    if log:
        # stacklevel 3 attributes the record to the caller of info() etc.
        logger.log(
            level, message, extra=get_extra_dict(**kwargs), exc_info=exc_info, stacklevel=3
        )
    err_console.print(markup)


def info(message: str, icon: str = Icon.INFO, **kwargs: Any) -> None:
    _report(logging.INFO, message, f"[success]{icon}[/] {message}", **kwargs)


def success(message: str, icon: str = Icon.OK, **kwargs: Any) -> None:
    _report(logging.INFO, message, f"[success]{icon}[/] {message}", **kwargs)


def warning(message: str, icon: str = Icon.WARNING, **kwargs: Any) -> None:
    _report(logging.WARNING, message, f"[warning]{icon} {message}[/]", **kwargs)


def error(
    message: str,
    icon: str = Icon.ERROR,
    *,
    exc_info: bool = False,
    log: bool = True,
    **kwargs: Any,
) -> None:
    """Print an error. `log=False` is for failures of the logging setup itself."""
    _report(
        logging.ERROR,
        message,
        f"[error]{icon} ERROR: {message}",
        log=log,
        exc_info=exc_info,
        **kwargs,
    )


def exit_err(
    message: str, code: int = 1, exception: Optional[Exception] = None, **kwargs: Any
) -> NoReturn:
    """Print and log an error, then exit with `code`.

    Errors go to stderr whatever the output format, so stdout only ever
    carries result documents.
    """
    _report(logging.ERROR, message, f"[error]{Icon.ERROR} ERROR: {message}", **kwargs)
    raise SystemExit(code)


def print_toml(toml_str: str) -> None:
    # markup off: TOML table headers look like rich tags
    console.print(toml_str, markup=False, soft_wrap=True)


def print_path(path: Path) -> None:
    console.print(
        f"[link=file://{path.resolve()}]{path}[/link]",
        highlight=False,
        soft_wrap=True,
    )


def configure_console(config: Config) -> None:
    """Apply the output settings of `config` to both consoles."""
    if config.app.output.color:
        return
    console._color_system = None  # pyright: ignore[reportPrivateUsage]
    err_console._color_system = None  # pyright: ignore[reportPrivateUsage]
    # typer builds its own consoles for help output
    os.environ["NO_COLOR"] = "1"
