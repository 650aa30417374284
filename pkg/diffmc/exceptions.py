from __future__ import annotations

import functools
from typing import TYPE_CHECKING
from typing import Any
from typing import NoReturn
from typing import Optional
from typing import Protocol
from typing import runtime_checkable

if TYPE_CHECKING:
    from pydantic import ValidationError

    from diffmc.games.trace import Transcript


class DiffMCError(Exception):
    """Base exception class for diffmc exceptions."""


class DiffMCFileError(DiffMCError, OSError):
    """Errors related to reading/writing files."""


class DiffMCFileNotFoundError(DiffMCError, FileNotFoundError):
    """A file we were asked to read does not exist."""


class ConfigError(DiffMCError):
    """Error with configuration file."""


class ConfigExistsError(ConfigError):
    """Configuration file already exists."""


class InputError(DiffMCError):
    """Invalid input passed to a library operation."""


class VertexError(InputError):
    """A vertex identifier is outside 0..n-1."""


class GraphFormatError(InputError):
    """A graph document does not describe a valid simple graph."""


class ColoringError(InputError):
    """A coloring is partial, refers to unknown vertices or uses invalid colors."""


class GeneratorError(InputError):
    """Unknown graph family or invalid family parameters."""


class PreconditionError(DiffMCError):
    """An operation was called on input it is not defined for."""


class UncoloredGraphError(PreconditionError):
    """Operation requires every vertex to carry a color."""


class UndefinedPairError(PreconditionError):
    """The differential neighbourhood of a pair with different colors is undefined."""


class FormulaError(DiffMCError):
    """Base class for errors in formulas."""


class FormulaSyntaxError(FormulaError):
    """Formula text does not conform to the grammar."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnboundVariableError(FormulaError):
    """A free variable has no value in the assignment."""


class OpenFormulaError(FormulaError):
    """A sentence was required, but the formula has free variables."""


class FreeVariableError(FormulaError):
    """The formula's free variables are not the ones the operation requires."""


class GameError(DiffMCError):
    """Base class for game errors."""


class IllegalMoveError(GameError):
    """A scripted move breaks the rules of the game being played."""

    def __init__(self, reason: str, transcript: Optional[Transcript] = None) -> None:
        self.reason = reason
        self.transcript = transcript
        super().__init__(reason)


class SizeGuardError(DiffMCError):
    """A computation would exceed a configured size limit."""


class UnknownSuiteError(DiffMCError):
    """No check suite with the given name exists."""


class Exiter(Protocol):
    """Protocol class for exit function that can be passed to an
    exception handler function.

    See Also:
    --------
    [diffmc.exceptions.HandleFunc][]
    """

    def __call__(
        self,
        message: str,
        code: int = ...,
        exception: Optional[Exception] = ...,
        **kwargs: Any,
    ) -> NoReturn: ...


@runtime_checkable
class HandleFunc(Protocol):
    """Interface for exception handler functions.

    They take any exception as the argument and exit with the appropriate
    message after running any necessary logging.
    """

    def __call__(self, e: Any) -> NoReturn: ...


# Usage/parse errors exit with 2, counterexamples with 1.
USAGE_EXIT_CODE = 2


def handle_notraceback(e: Exception) -> NoReturn:
    """Handles an exception with no traceback in console.
    The exception is logged with a traceback in the log file.
    """
    get_exit_err()(str(e), code=USAGE_EXIT_CODE, exception=e, exc_info=True)


def handle_validation_error(e: ValidationError) -> NoReturn:
    """Handles a Pydantic validation error."""
    get_exit_err()(
        f"Invalid input: {e}", code=USAGE_EXIT_CODE, exception=e, exc_info=True
    )


def get_exception_handler(type_: type[Exception]) -> Optional[HandleFunc]:
    """Returns the exception handler for the given exception type."""
    from pydantic import ValidationError

    # Defined inline to defer the pydantic import
    EXC_HANDLERS: dict[type[Exception], HandleFunc] = {
        DiffMCError: handle_notraceback,
        ValidationError: handle_validation_error,
    }
    """Mapping of exception types to exception handling strategies."""

    handler = EXC_HANDLERS.get(type_, None)
    if handler:
        return handler
    if type_.__bases__:
        for base in type_.__bases__:
            handler = get_exception_handler(base)
            if handler:
                return handler
    return None


def handle_exception(e: Exception) -> NoReturn:
    """Handles an exception and exits with the appropriate message."""
    handler = get_exception_handler(type(e))
    if not handler:
        raise e
    handler(e)


@functools.lru_cache(maxsize=1)
def get_exit_err() -> Exiter:
    """Cached lazy-import of `diffmc.output.console.exit_err`.
    Avoids circular imports.
    """
    from diffmc.output.console import exit_err as _exit_err

    return _exit_err
