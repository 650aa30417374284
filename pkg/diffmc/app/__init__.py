from __future__ import annotations

from .app import *  # noqa: F403 # wildcard import to avoid circular import
from .app import Example  # explicit import for type checker
from .app import StatefulApp  # explicit import for type checker

app = StatefulApp(
    name="diffmc",
    help="Differential Ehrenfeucht-Fraïssé games and evaluation-tree model checking.",
    add_completion=False,
    rich_markup_mode="rich",
    no_args_is_help=True,
)

# Import commands to register them with the app
from diffmc.commands import bootstrap_commands  # noqa: E402

bootstrap_commands()

__all__ = ["Example", "StatefulApp", "app"]
