"""Conversion of sentences to prenex normal form."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from collections.abc import Mapping
from dataclasses import dataclass

from strenum import StrEnum

from diffmc.exceptions import FormulaError
from diffmc.exceptions import OpenFormulaError
from diffmc.logic.formula import BOTTOM
from diffmc.logic.formula import TOP
from diffmc.logic.formula import And
from diffmc.logic.formula import Bottom
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
from diffmc.logic.formula import Top
from diffmc.logic.formula import format_formula
from diffmc.logic.formula import free_variables
from diffmc.logic.formula import is_quantifier_free

logger = logging.getLogger(__name__)


class Quantifier(StrEnum):
    EXISTS = "exists"
    FORALL = "forall"


@dataclass(frozen=True)
class PrenexSentence:
    """A quantifier prefix followed by a quantifier-free matrix."""

    prefix: tuple[tuple[Quantifier, str], ...]
    matrix: Formula

    def __post_init__(self) -> None:
        if not is_quantifier_free(self.matrix):
            raise FormulaError("Prenex matrix must be quantifier-free")
        unbound = free_variables(self.matrix) - set(self.variables)
        if unbound:
            raise OpenFormulaError(
                f"Matrix variables not bound by the prefix: {', '.join(sorted(unbound))}"
            )

    @property
    def q(self) -> int:
        """Number of quantifiers."""
        return len(self.prefix)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(var for _, var in self.prefix)

    @property
    def quantifiers(self) -> tuple[Quantifier, ...]:
        return tuple(qu for qu, _ in self.prefix)

    def to_formula(self) -> Formula:
        phi = self.matrix
        for qu, var in reversed(self.prefix):
            phi = Exists(var, phi) if qu == Quantifier.EXISTS else Forall(var, phi)
        return phi

    def __str__(self) -> str:
        return format_formula(self.to_formula())


def eliminate_arrows(phi: Formula) -> Formula:
    """Rewrite `->` and `<->` with `!`, `&` and `|`."""
    if isinstance(phi, Implies):
        return Or(Not(eliminate_arrows(phi.left)), eliminate_arrows(phi.right))
    if isinstance(phi, Iff):
        a, b = eliminate_arrows(phi.left), eliminate_arrows(phi.right)
        return And(Or(Not(a), b), Or(a, Not(b)))
    if isinstance(phi, Not):
        return Not(eliminate_arrows(phi.body))
    if isinstance(phi, And):
        return And(eliminate_arrows(phi.left), eliminate_arrows(phi.right))
    if isinstance(phi, Or):
        return Or(eliminate_arrows(phi.left), eliminate_arrows(phi.right))
    if isinstance(phi, Exists):
        return Exists(phi.var, eliminate_arrows(phi.body))
    if isinstance(phi, Forall):
        return Forall(phi.var, eliminate_arrows(phi.body))
    return phi


def negation_normal_form(phi: Formula) -> Formula:
    """Push negations down to atoms. Input must be free of `->` and `<->`."""
    if isinstance(phi, Not):
        body = phi.body
        if isinstance(body, Not):
            return negation_normal_form(body.body)
        if isinstance(body, Top):
            return BOTTOM
        if isinstance(body, Bottom):
            return TOP
        if isinstance(body, And):
            return Or(
                negation_normal_form(Not(body.left)),
                negation_normal_form(Not(body.right)),
            )
        if isinstance(body, Or):
            return And(
                negation_normal_form(Not(body.left)),
                negation_normal_form(Not(body.right)),
            )
        if isinstance(body, Exists):
            return Forall(body.var, negation_normal_form(Not(body.body)))
        if isinstance(body, Forall):
            return Exists(body.var, negation_normal_form(Not(body.body)))
        if isinstance(body, (Implies, Iff)):
            return negation_normal_form(Not(eliminate_arrows(body)))
        return phi
    if isinstance(phi, And):
        return And(negation_normal_form(phi.left), negation_normal_form(phi.right))
    if isinstance(phi, Or):
        return Or(negation_normal_form(phi.left), negation_normal_form(phi.right))
    if isinstance(phi, Exists):
        return Exists(phi.var, negation_normal_form(phi.body))
    if isinstance(phi, Forall):
        return Forall(phi.var, negation_normal_form(phi.body))
    if isinstance(phi, (Implies, Iff)):
        return negation_normal_form(eliminate_arrows(phi))
    return phi


def _rename(phi: Formula, env: Mapping[str, str], names: Iterator[str]) -> Formula:
    if isinstance(phi, Edge):
        return Edge(env.get(phi.left, phi.left), env.get(phi.right, phi.right))
    if isinstance(phi, Eq):
        return Eq(env.get(phi.left, phi.left), env.get(phi.right, phi.right))
    if isinstance(phi, Label):
        return Label(phi.label, env.get(phi.var, phi.var))
    if isinstance(phi, Not):
        return Not(_rename(phi.body, env, names))
    if isinstance(phi, And):
        left = _rename(phi.left, env, names)
        return And(left, _rename(phi.right, env, names))
    if isinstance(phi, Or):
        left = _rename(phi.left, env, names)
        return Or(left, _rename(phi.right, env, names))
    if isinstance(phi, (Exists, Forall)):
        new = next(names)
        body = _rename(phi.body, {**env, phi.var: new}, names)
        return Exists(new, body) if isinstance(phi, Exists) else Forall(new, body)
    return phi


def rename_bound_variables(phi: Formula, stem: str = "x") -> Formula:
    """Give every quantifier its own variable `<stem>_1, <stem>_2, ...` in
    pre-order. Input must be free of `->` and `<->`."""
    counter = (f"{stem}_{i}" for i in itertools.count(1))
    return _rename(phi, {}, counter)


def _pull(phi: Formula) -> tuple[list[tuple[Quantifier, str]], Formula]:
    if isinstance(phi, Exists):
        prefix, matrix = _pull(phi.body)
        return [(Quantifier.EXISTS, phi.var), *prefix], matrix
    if isinstance(phi, Forall):
        prefix, matrix = _pull(phi.body)
        return [(Quantifier.FORALL, phi.var), *prefix], matrix
    if isinstance(phi, (And, Or)):
        lp, lm = _pull(phi.left)
        rp, rm = _pull(phi.right)
        matrix = And(lm, rm) if isinstance(phi, And) else Or(lm, rm)
        return lp + rp, matrix
    return [], phi


def to_prenex(phi: Formula) -> PrenexSentence:
    """An equivalent prenex sentence.

    Arrows are eliminated, negations pushed to the atoms, bound variables
    renamed to `x_1..x_q` in order of occurrence and quantifiers pulled to
    the front. The result has one quantifier per quantifier occurrence of
    the arrow-free input; nothing is minimised. Pulling a quantifier out of
    a disjunction assumes a nonempty universe.

    Raises:
        OpenFormulaError: `phi` has free variables.
    """
    free = free_variables(phi)
    if free:
        raise OpenFormulaError(
            f"Only sentences have a prenex form; free variables: {', '.join(sorted(free))}"
        )
    nnf = negation_normal_form(eliminate_arrows(phi))
    prefix, matrix = _pull(rename_bound_variables(nnf))
    return PrenexSentence(tuple(prefix), matrix)


def as_prenex(phi: Formula) -> PrenexSentence:
    """Read an already prenex sentence as is, or convert it with `to_prenex`."""
    prefix: list[tuple[Quantifier, str]] = []
    body = phi
    while isinstance(body, (Exists, Forall)):
        qu = Quantifier.EXISTS if isinstance(body, Exists) else Quantifier.FORALL
        prefix.append((qu, body.var))
        body = body.body
    variables = [v for _, v in prefix]
    if (
        is_quantifier_free(body)
        and len(set(variables)) == len(variables)
        and not free_variables(phi)
    ):
        return PrenexSentence(tuple(prefix), body)
    return to_prenex(phi)
