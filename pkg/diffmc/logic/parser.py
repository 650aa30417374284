"""Text syntax for formulas.

    forall x. exists y. (E(x,y) & !x=y)
    L[red](x) <-> L[red](y)

Precedence from tightest to loosest: `!`, `&`, `|`, `->`, `<->`. `&`, `|`
and `<->` associate to the left, `->` to the right. A quantifier extends
as far right as possible, so `E(x,y) & exists z. E(y,z) | x=z` reads as
`E(x,y) & (exists z. (E(y,z) | x=z))`. `#` starts a comment.
"""

from __future__ import annotations

import functools
import logging
from pathlib import Path

from lark import Lark
from lark import Token
from lark import Transformer
from lark import v_args
from lark.exceptions import UnexpectedCharacters
from lark.exceptions import UnexpectedEOF
from lark.exceptions import UnexpectedInput
from lark.exceptions import UnexpectedToken
from lark.exceptions import VisitError

from diffmc.exceptions import FormulaSyntaxError
from diffmc.logic.formula import BOTTOM
from diffmc.logic.formula import TOP
from diffmc.logic.formula import And
from diffmc.logic.formula import Edge
from diffmc.logic.formula import Eq
from diffmc.logic.formula import Exists
from diffmc.logic.formula import Forall
from diffmc.logic.formula import Formula
from diffmc.logic.formula import Iff
from diffmc.logic.formula import Implies
from diffmc.logic.formula import Label
from diffmc.logic.formula import Not
from diffmc.logic.formula import Or
from diffmc.utils.fs import read_file

logger = logging.getLogger(__name__)

# Each connective level comes in a closed form and an open form. An open
# form ends in a quantifier whose body runs to the end of the enclosing
# scope, so it can only be the rightmost operand.
FORMULA_GRAMMAR = r"""
    ?start: formula

    ?formula: iff_c
            | iff_o

    ?iff_c: imp_c
          | iff_c "<->" imp_c               -> iff
    ?iff_o: imp_o
          | iff_c "<->" imp_o               -> iff

    ?imp_c: disj_c
          | disj_c "->" imp_c               -> implies
    ?imp_o: disj_o
          | disj_c "->" imp_o               -> implies

    ?disj_c: conj_c
           | disj_c "|" conj_c              -> or_
    ?disj_o: conj_o
           | disj_c "|" conj_o              -> or_

    ?conj_c: unary_c
           | conj_c "&" unary_c             -> and_
    ?conj_o: unary_o
           | conj_c "&" unary_o             -> and_

    ?unary_c: "!" unary_c                   -> not_
            | atom
    ?unary_o: "!" unary_o                   -> not_
            | "forall" VAR "." formula      -> forall
            | "exists" VAR "." formula      -> exists

    ?atom: "E" "(" VAR "," VAR ")"          -> edge
         | VAR "=" VAR                      -> eq
         | "L" "[" LABEL "]" "(" VAR ")"    -> label
         | "true"                           -> top
         | "false"                          -> bottom
         | "(" formula ")"

    VAR: /[A-Za-z_][A-Za-z0-9_]*/
    LABEL: /[A-Za-z0-9_][A-Za-z0-9_:\-]*/

    COMMENT: /#[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


@v_args(inline=True)
class FormulaTransformer(Transformer[Token, Formula]):
    """Turns a parse tree into a `Formula`."""

    def forall(self, var: Token, body: Formula) -> Formula:
        return Forall(str(var), body)

    def exists(self, var: Token, body: Formula) -> Formula:
        return Exists(str(var), body)

    def iff(self, left: Formula, right: Formula) -> Formula:
        return Iff(left, right)

    def implies(self, left: Formula, right: Formula) -> Formula:
        return Implies(left, right)

    def or_(self, left: Formula, right: Formula) -> Formula:
        return Or(left, right)

    def and_(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    def not_(self, body: Formula) -> Formula:
        return Not(body)

    def edge(self, left: Token, right: Token) -> Formula:
        return Edge(str(left), str(right))

    def eq(self, left: Token, right: Token) -> Formula:
        return Eq(str(left), str(right))

    def label(self, name: Token, var: Token) -> Formula:
        return Label(str(name), str(var))

    def top(self) -> Formula:
        return TOP

    def bottom(self) -> Formula:
        return BOTTOM


@functools.lru_cache(maxsize=1)
def get_parser() -> Lark:
    return Lark(FORMULA_GRAMMAR, parser="lalr", transformer=FormulaTransformer())


def _describe(e: UnexpectedInput) -> str:
    if isinstance(e, UnexpectedEOF):
        return "Unexpected end of formula"
    if isinstance(e, UnexpectedToken):
        tok = e.token
        if tok.type == "$END":
            return "Unexpected end of formula"
        return f"Unexpected token {str(tok)!r}"
    if isinstance(e, UnexpectedCharacters):
        return f"Unknown token starting at {e.char!r}"
    return "Invalid formula"


def parse_formula(text: str) -> Formula:
    """Parse formula text.

    Raises:
        FormulaSyntaxError: The text is not a formula; carries line and column.
    """
    try:
        return get_parser().parse(text)  # pyright: ignore[reportReturnType]
    except UnexpectedInput as e:
        line = max(getattr(e, "line", 0) or 0, 0)
        column = max(getattr(e, "column", 0) or 0, 0)
        at_end = isinstance(e, UnexpectedEOF) or (
            isinstance(e, UnexpectedToken) and e.token.type == "$END"
        )
        if at_end or line == 0:
            # report the position just past the text
            lines = text.splitlines() or [""]
            line, column = len(lines), len(lines[-1]) + 1
        raise FormulaSyntaxError(_describe(e), line, column) from e
    except VisitError as e:
        raise FormulaSyntaxError(f"Invalid formula: {e.orig_exc}") from e


def read_formula(path: Path) -> Formula:
    """Read one formula from a `.fo` file."""
    logger.debug("Reading formula from %s", path)
    return parse_formula(read_file(path))
