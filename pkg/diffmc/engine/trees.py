"""Evaluation trees of prenex sentences.

A node at depth i stands for the assignment of the first i quantified
variables to the vertices on its root path. The full tree has n children
at every inner node; a reduced tree only keeps the children picked by a
representative oracle.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from typing import Callable
from typing import Optional

from diffmc.config.constants import DEFAULT_MAX_FULL_TREE_POSITIONS
from diffmc.exceptions import InputError
from diffmc.exceptions import SizeGuardError
from diffmc.games.iso import AtomicType
from diffmc.games.iso import atomic_type
from diffmc.graphs.graph import LabeledGraph
from diffmc.graphs.graph import VertexSet
from diffmc.logic.prenex import PrenexSentence
from diffmc.logic.prenex import Quantifier
from diffmc.logic.semantics import compile_formula
from diffmc.relations import hintikka_type

logger = logging.getLogger(__name__)

IsoType = AtomicType
"""Equality pattern, adjacency pattern and label vector of a tuple."""

RepresentativeOracle = Callable[[LabeledGraph, VertexSet, int], VertexSet]
"""(G, v̄, p) -> vertices meeting every rank-p type class over v̄."""


@dataclass
class EvalNode:
    vertex: Optional[int] = None
    """None for the root."""
    children: list[EvalNode] = field(default_factory=list)
    label: object = None


@dataclass
class EvalTree:
    root: EvalNode
    height: int

    def nodes(self) -> Iterator[tuple[EvalNode, int]]:
        """Every node with its depth, in preorder."""
        stack = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            yield node, depth
            stack.extend((c, depth + 1) for c in reversed(node.children))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def level_branching(self) -> list[int]:
        """Largest number of children of a node at each depth 0..height-1."""
        widest = [0] * self.height
        for node, depth in self.nodes():
            if depth < self.height:
                widest[depth] = max(widest[depth], len(node.children))
        return widest

    def paths(self) -> Iterator[VertexSet]:
        """Root-to-leaf vertex tuples, leaves in tree order."""

        def walk(node: EvalNode, prefix: VertexSet) -> Iterator[VertexSet]:
            if not node.children:
                yield prefix
                return
            for child in node.children:
                assert child.vertex is not None
                yield from walk(child, (*prefix, child.vertex))

        yield from walk(self.root, ())

    def leaves_at_height(self) -> bool:
        """All leaves sit at depth `height`."""
        return all(
            depth == self.height
            for node, depth in self.nodes()
            if not node.children
        )


def iso_type(g: LabeledGraph, t: Sequence[int]) -> IsoType:
    """Two tuples have equal iso types iff mapping one onto the other is a
    label-preserving isomorphism of the induced subgraphs."""
    return atomic_type(g, t)


def full_tree(
    g: LabeledGraph, q: int, *, max_positions: int = DEFAULT_MAX_FULL_TREE_POSITIONS
) -> EvalTree:
    """The tree of all n**q assignments.

    Raises:
        SizeGuardError: n**q exceeds `max_positions`.
    """
    if q < 0:
        raise InputError(f"Height must be nonnegative, got {q}")
    if g.n**q > max_positions:
        raise SizeGuardError(
            f"A full tree with {g.n}**{q} leaves exceeds the limit of "
            f"{max_positions} positions"
        )

    def build(vertex: Optional[int], depth: int) -> EvalNode:
        node = EvalNode(vertex)
        if depth < q:
            node.children = [build(v, depth + 1) for v in g.vertices]
        return node

    return EvalTree(build(None, 0), q)


def label_types(tree: EvalTree, g: LabeledGraph) -> EvalTree:
    """Attach the labels of the (G, q)-tree in place.

    A leaf is labelled with the iso type of its root path, an inner node
    with the set of its children's labels.
    """

    def walk(node: EvalNode, prefix: VertexSet) -> object:
        if not node.children:
            node.label = iso_type(g, prefix)
        else:
            node.label = frozenset(
                walk(child, (*prefix, child.vertex))  # type: ignore[arg-type]
                for child in node.children
            )
        return node.label

    walk(tree.root, ())
    return tree


def reduced_tree(g: LabeledGraph, q: int, rep_fn: RepresentativeOracle) -> EvalTree:
    """Evaluation tree keeping only representative children.

    The root gets a child for every vertex of rep_fn(G, (), q-1); a node at
    depth i >= 1 with root path v̄ gets a child for every vertex of
    rep_fn(G, v̄, q-i). Leaves sit at depth q.
    """
    if q < 0:
        raise InputError(f"Height must be nonnegative, got {q}")

    def build(node: EvalNode, prefix: VertexSet, depth: int) -> None:
        if depth == q:
            return
        p = q - 1 if depth == 0 else q - depth
        for v in rep_fn(g, prefix, p):
            child = EvalNode(v)
            node.children.append(child)
            build(child, (*prefix, v), depth + 1)

    tree = EvalTree(EvalNode(), q)
    build(tree.root, (), 0)
    logger.debug(
        "Reduced tree of height %d: %d nodes, branching %s",
        q,
        tree.size(),
        tree.level_branching(),
    )
    return tree


def verdict_from_tree(tree: EvalTree, g: LabeledGraph, phi: PrenexSentence) -> bool:
    """Truth value of `phi` read off an evaluation tree.

    Leaves evaluate the matrix on their root path; inner nodes at depth i
    take the OR (∃) or AND (∀) of their children according to the
    (i+1)-th quantifier.

    Raises:
        InputError: The tree height differs from the number of quantifiers.
    """
    if tree.height != phi.q:
        raise InputError(
            f"Tree of height {tree.height} cannot evaluate {phi.q} quantifiers"
        )
    matrix = compile_formula(phi.matrix)
    variables = phi.variables
    quantifiers = phi.quantifiers

    def walk(node: EvalNode, env: dict[str, int], depth: int) -> bool:
        if depth == tree.height:
            return matrix(g, env)
        results = (
            walk(child, {**env, variables[depth]: child.vertex}, depth + 1)  # type: ignore[dict-item]
            for child in node.children
        )
        if quantifiers[depth] == Quantifier.EXISTS:
            return any(results)
        return all(results)

    return walk(tree.root, {}, 0)


def full_tree_mc(
    g: LabeledGraph,
    phi: PrenexSentence,
    *,
    max_positions: int = DEFAULT_MAX_FULL_TREE_POSITIONS,
) -> bool:
    """Brute-force verdict through the full evaluation tree."""
    return verdict_from_tree(full_tree(g, phi.q, max_positions=max_positions), g, phi)


def exact_representatives(g: LabeledGraph, vs: VertexSet, p: int) -> VertexSet:
    """Smallest vertex of every class of rank-p types over `vs`."""
    seen: dict[object, int] = {}
    for u in g.vertices:
        seen.setdefault(hintikka_type(g, (*vs, u), p), u)
    return tuple(sorted(seen.values()))
