"""Formula corpora shared by the oracle checks and the test-suite."""

from __future__ import annotations

import functools

from diffmc.logic.formula import Formula
from diffmc.logic.formula import free_variables
from diffmc.logic.parser import parse_formula
from diffmc.logic.pinning import tuple_variable

SENTENCES: tuple[str, ...] = (
    "exists x. true",
    "forall x. false",
    "forall x. exists y. E(x,y)",
    "exists x. forall y. !E(x,y)",
    "exists x. forall y. (E(x,y) | x=y)",
    "forall x. forall y. (x=y | E(x,y))",
    "forall x. forall y. !E(x,y)",
    "forall x. exists y. (!x=y & !E(x,y))",
    "exists x. exists y. (!x=y & !E(x,y))",
    "exists x. exists y. forall z. (E(x,z) | E(y,z))",
    "exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))",
    "exists x. exists y. exists z. (E(x,y) & E(y,z) & !E(x,z) & !x=z)",
    "exists x. exists y. exists z. (!x=y & !x=z & !y=z)",
    "forall x. forall y. forall z. (x=y | x=z | y=z)",
    "forall x. exists y. exists z. (E(x,y) & E(x,z) & !y=z)",
    "exists x. forall y. forall z. ((E(x,y) & E(x,z)) -> y=z)",
    "forall x. forall y. exists z. (E(x,y) -> (E(x,z) & E(y,z)))",
    "forall x. forall y. exists z. (x=y | E(x,y) | (E(x,z) & E(z,y)))",
    "exists x. forall y. exists z. (x=y | (E(x,z) & E(z,y)))",
    "forall x. exists y. forall z. (E(x,y) & (E(y,z) -> z=x))",
    "exists x. forall y. forall z. ((E(x,y) & E(x,z) & !y=z) -> E(y,z))",
    "forall x. forall y. exists z. (E(x,y) <-> (E(x,z) & E(y,z)))",
    "forall x. exists y. exists z. (E(x,y) & E(y,z) & !x=z & !E(x,z))",
    "exists x. L[red](x)",
    "forall x. exists y. (L[red](x) -> (E(x,y) & L[blue](y)))",
    "exists x. forall y. (E(x,y) -> !L[red](y))",
)
"""Prenex sentences with at most three quantifiers."""

NON_PRENEX_SENTENCES: tuple[str, ...] = (
    "!(exists x. L[a](x))",
    "(exists x. E(x,x)) & (exists x. !E(x,x))",
    "(forall x. exists y. E(x,y)) -> (exists x. exists y. (E(x,y) & !x=y))",
    "(exists x. forall y. !E(x,y)) <-> (forall x. exists y. x=y)",
    "!(forall x. ((exists y. E(x,y)) | (forall y. (x=y | !E(x,y)))))",
)
"""Sentences exercising the prenex conversion."""

PINNED_FORMULAS: tuple[str, ...] = (
    "E(x_1,x_2)",
    "x_1=x_2",
    "E(x_1,x_2) & !E(x_2,x_3)",
    "x_2=x_3 | E(x_1,x_3)",
    "L[red](x_1) -> L[red](x_2)",
    "exists y. (E(x_1,y) & E(y,x_2))",
    "forall y. (E(x_1,y) -> E(x_2,y))",
    "forall x_1. E(x_1,x_2)",
    "exists x. (E(x,x_2) & E(x,x_1))",
    "exists y. (E(x_3,y) & !E(x_1,y) & !y=x_2)",
    "exists y. forall z. (E(x_1,y) & (E(y,z) -> (z=x_1 | E(z,x_2))))",
    "forall y. exists z. ((E(x_2,y) & !y=x_1) -> (E(y,z) & E(z,x_3)))",
)
"""Formulas over x_1..x_3 of quantifier rank at most 2."""


@functools.lru_cache(maxsize=1)
def sentences() -> tuple[Formula, ...]:
    return tuple(parse_formula(s) for s in SENTENCES)


@functools.lru_cache(maxsize=1)
def non_prenex_sentences() -> tuple[Formula, ...]:
    return tuple(parse_formula(s) for s in NON_PRENEX_SENTENCES)


@functools.lru_cache(maxsize=8)
def pinned_formulas(k: int) -> tuple[Formula, ...]:
    """Corpus formulas usable with a pinned tuple of length k.

    Their free variables lie among x_1..x_{k+1}.
    """
    allowed = {tuple_variable(i) for i in range(1, k + 2)}
    parsed = (parse_formula(s) for s in PINNED_FORMULAS)
    return tuple(phi for phi in parsed if free_variables(phi) <= allowed)
