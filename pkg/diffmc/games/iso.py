"""Partial isomorphisms between vertex tuples."""

from __future__ import annotations

from collections.abc import Hashable
from collections.abc import Sequence

from diffmc.exceptions import InputError
from diffmc.graphs.graph import LabeledGraph

AtomicType = tuple[Hashable, ...]


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise InputError(f"Tuples differ in length: {len(a)} and {len(b)}")


def partial_iso(
    g: LabeledGraph, a: Sequence[int], h: LabeledGraph, b: Sequence[int]
) -> bool:
    """True iff a_i ↦ b_i is a well-defined, injective, adjacency- and
    label-preserving map. Color labels count as labels.

    Raises:
        InputError: The tuples differ in length.
    """
    _check_lengths(a, b)
    g.check_vertices(a)
    h.check_vertices(b)
    for i, (x, y) in enumerate(zip(a, b)):
        if g.labels_of(x) != h.labels_of(y):
            return False
        for j in range(i):
            if (a[j] == x) != (b[j] == y):
                return False
            if g.adjacent(a[j], x) != h.adjacent(b[j], y):
                return False
    return True


def extends_iso(
    g: LabeledGraph,
    a: Sequence[int],
    x: int,
    h: LabeledGraph,
    b: Sequence[int],
    y: int,
) -> bool:
    """Given that ā ↦ b̄ is a partial isomorphism, whether āx ↦ b̄y still is."""
    if g.atomic_labels[x] != h.atomic_labels[y]:
        return False
    for ai, bi in zip(a, b):
        if (ai == x) != (bi == y):
            return False
        if g.adjacent(ai, x) != h.adjacent(bi, y):
            return False
    return True


def atomic_type(g: LabeledGraph, t: Sequence[int]) -> AtomicType:
    """Canonical encoding of the atomic type of a tuple.

    Equality pattern (first position holding the same vertex), adjacency
    between positions i < j and the label set of every position. Two
    tuples, of one graph or of two, have equal encodings iff they are
    partially isomorphic.
    """
    first = {v: i for i, v in reversed(list(enumerate(t)))}
    equality = tuple(first[v] for v in t)
    adjacency = tuple(
        g.adjacent(t[i], t[j]) for i in range(len(t)) for j in range(i + 1, len(t))
    )
    labels = tuple(tuple(sorted(g.atomic_labels[v])) for v in t)
    return (equality, adjacency, labels)
