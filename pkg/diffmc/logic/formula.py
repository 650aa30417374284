"""First-order formulas over the vocabulary {E, =, L_a}.

Formulas are immutable and hashable, so they can key caches of compiled
evaluators.
"""

from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Edge:
    left: str
    right: str


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Label:
    label: str
    var: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Not:
    body: Formula


@dataclass(frozen=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff:
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists:
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall:
    var: str
    body: Formula


Atom = Union[Edge, Eq, Label, Top, Bottom]
Binary = Union[And, Or, Implies, Iff]
Quantified = Union[Exists, Forall]
Formula = Union[Atom, Not, Binary, Quantified]

TOP = Top()
BOTTOM = Bottom()

BINARY_SYMBOLS: dict[type, str] = {
    And: "&",
    Or: "|",
    Implies: "->",
    Iff: "<->",
}


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is `true`."""
    out: Formula | None = None
    for p in parts:
        out = p if out is None else And(out, p)
    return TOP if out is None else out


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is `false`."""
    out: Formula | None = None
    for p in parts:
        out = p if out is None else Or(out, p)
    return BOTTOM if out is None else out


def children(phi: Formula) -> tuple[Formula, ...]:
    if isinstance(phi, Not):
        return (phi.body,)
    if isinstance(phi, (And, Or, Implies, Iff)):
        return (phi.left, phi.right)
    if isinstance(phi, (Exists, Forall)):
        return (phi.body,)
    return ()


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Pre-order traversal."""
    stack = [phi]
    while stack:
        f = stack.pop()
        yield f
        stack.extend(reversed(children(f)))


def atom_variables(phi: Atom) -> tuple[str, ...]:
    if isinstance(phi, (Edge, Eq)):
        return (phi.left, phi.right)
    if isinstance(phi, Label):
        return (phi.var,)
    return ()


def free_variables(phi: Formula) -> frozenset[str]:
    if isinstance(phi, (Edge, Eq, Label, Top, Bottom)):
        return frozenset(atom_variables(phi))
    if isinstance(phi, (Exists, Forall)):
        return free_variables(phi.body) - {phi.var}
    out: frozenset[str] = frozenset()
    for c in children(phi):
        out |= free_variables(c)
    return out


def variables(phi: Formula) -> frozenset[str]:
    """Every variable name occurring in the formula, free or bound."""
    names: set[str] = set()
    for f in subformulas(phi):
        if isinstance(f, (Exists, Forall)):
            names.add(f.var)
        elif isinstance(f, (Edge, Eq, Label)):
            names.update(atom_variables(f))
    return frozenset(names)


def is_sentence(phi: Formula) -> bool:
    return not free_variables(phi)


def quantifier_rank(phi: Formula) -> int:
    if isinstance(phi, (Exists, Forall)):
        return 1 + quantifier_rank(phi.body)
    return max((quantifier_rank(c) for c in children(phi)), default=0)


def quantifier_count(phi: Formula) -> int:
    return sum(isinstance(f, (Exists, Forall)) for f in subformulas(phi))


def is_quantifier_free(phi: Formula) -> bool:
    return quantifier_count(phi) == 0


def is_well_named(phi: Formula, _bound: frozenset[str] = frozenset()) -> bool:
    """No variable is quantified twice on one root-to-leaf path."""
    if isinstance(phi, (Exists, Forall)):
        if phi.var in _bound:
            return False
        return is_well_named(phi.body, _bound | {phi.var})
    return all(is_well_named(c, _bound) for c in children(phi))


def labels_used(phi: Formula) -> frozenset[str]:
    return frozenset(f.label for f in subformulas(phi) if isinstance(f, Label))


def format_formula(phi: Formula) -> str:
    """Print a formula in the text syntax accepted by `parse_formula`.

    Binary connectives are always parenthesised, so the output parses back
    to an equal formula.
    """
    return _fmt(phi, top=True)


def _fmt(phi: Formula, *, top: bool = False) -> str:
    if isinstance(phi, Edge):
        return f"E({phi.left},{phi.right})"
    if isinstance(phi, Eq):
        return f"{phi.left}={phi.right}"
    if isinstance(phi, Label):
        return f"L[{phi.label}]({phi.var})"
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, Not):
        return f"!{_fmt(phi.body)}"
    if isinstance(phi, (Exists, Forall)):
        keyword = "exists" if isinstance(phi, Exists) else "forall"
        text = f"{keyword} {phi.var}. {_fmt(phi.body, top=True)}"
        # nested quantifiers are parenthesised to keep their scope
        return text if top else f"({text})"
    symbol = BINARY_SYMBOLS[type(phi)]
    return f"({_fmt(phi.left)} {symbol} {_fmt(phi.right)})"
