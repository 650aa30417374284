"""Formulas defining the winner of the differential game.

`xi_formula(m, k, alphabet)` has free variables x_1..x_k and y_1..y_k and
holds at (ā, b̄) exactly when Duplicator wins the m-round differential game
from (ā, b̄).
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterable
from collections.abc import Sequence

from diffmc.exceptions import InputError
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
from diffmc.logic.formula import conj

logger = logging.getLogger(__name__)


def x_var(i: int) -> str:
    return f"x_{i}"


def y_var(i: int) -> str:
    return f"y_{i}"


def differs(x: str, y: str, z: str) -> Formula:
    """z is adjacent to exactly one of x and y, i.e. z ∈ D(x, y)."""
    return Or(
        And(Edge(x, z), Not(Edge(y, z))),
        And(Not(Edge(x, z)), Edge(y, z)),
    )


def same_atomic_type(
    xs: Sequence[str], ys: Sequence[str], alphabet: Sequence[str]
) -> Formula:
    """x̄ ↦ ȳ is a label-preserving partial isomorphism."""
    pairs = [(i, j) for i in range(len(xs)) for j in range(i + 1, len(xs))]
    return conj(
        [
            *(Iff(Edge(xs[i], xs[j]), Edge(ys[i], ys[j])) for i, j in pairs),
            *(Iff(Eq(xs[i], xs[j]), Eq(ys[i], ys[j])) for i, j in pairs),
            *(
                Iff(Label(a, x), Label(a, y))
                for x, y in zip(xs, ys)
                for a in alphabet
            ),
        ]
    )


def _xi(
    m: int, xs: tuple[str, ...], ys: tuple[str, ...], alphabet: tuple[str, ...]
) -> Formula:
    base = same_atomic_type(xs, ys, alphabet)
    if m == 0:
        return base
    depth = len(xs) + 1
    z, w = f"z_{depth}", f"w_{depth}"
    rounds: list[Formula] = []
    for x, y in zip(xs, ys):
        # Spoiler plays z in D(x, y) on either side, Duplicator answers w in D(x, y)
        after_a_move = _xi(m - 1, (*xs, z), (*ys, w), alphabet)
        after_b_move = _xi(m - 1, (*xs, w), (*ys, z), alphabet)
        answer_b = Exists(w, And(differs(x, y, w), after_a_move))
        answer_a = Exists(w, And(differs(x, y, w), after_b_move))
        rounds.append(Forall(z, Implies(differs(x, y, z), And(answer_b, answer_a))))
    return conj([base, *rounds])


@functools.lru_cache(maxsize=64)
def _cached_xi(m: int, k: int, alphabet: tuple[str, ...]) -> Formula:
    xs = tuple(x_var(i) for i in range(1, k + 1))
    ys = tuple(y_var(i) for i in range(1, k + 1))
    return _xi(m, xs, ys, alphabet)


def xi_formula(m: int, k: int = 1, label_alphabet: Iterable[str] = ()) -> Formula:
    """The m-round differential game formula over k-tuples.

    ξ_0 states that x̄ ↦ ȳ is a label-preserving partial isomorphism. ξ_m
    is ξ_0 together with, for every index i, a universal quantifier over
    the Spoiler moves z ∈ D(x_i, y_i) on either side, each answered by an
    existential Duplicator move inside the same D(x_i, y_i) after which
    ξ_{m-1} holds for the extended tuples. Quantifier rank is 2m.

    Bound variables at round depth d are named z_d and w_d, so the
    formula is well named.
    """
    if m < 0:
        raise InputError(f"Rounds must be nonnegative, got {m}")
    if k < 1:
        raise InputError(f"Tuple length must be positive, got {k}")
    return _cached_xi(m, k, tuple(sorted(set(label_alphabet))))
