"""Clique-separator decomposition into atoms.

A separator here is any complete vertex set whose removal disconnects
the graph. Atoms are the leaves of the recursive decomposition: induced
subgraphs that are connected and admit no such separator. The recursion
keeps the separator inside every part, so atoms may overlap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    Graph,
    VertexSet,
    connected_components,
    enumerate_maximal_cliques,
    induced_subgraph,
    is_connected,
)


@dataclass(frozen=True)
class AtomLeaf:
    """A decomposition leaf: `vertices` index the original graph."""

    vertices: VertexSet
    graph: Graph


@dataclass(frozen=True)
class SeparatorNode:
    """An internal node: a complete set splitting the subproblem."""

    separator: VertexSet
    children: tuple["SeparatorNode | AtomLeaf", ...]


@dataclass(frozen=True)
class CliqueDecomposition:
    graph: Graph
    root: SeparatorNode | AtomLeaf

    def leaves(self) -> list[AtomLeaf]:
        out: list[AtomLeaf] = []
        stack: list[SeparatorNode | AtomLeaf] = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, AtomLeaf):
                out.append(node)
            else:
                stack.extend(reversed(node.children))
        return out


def _complete_subsets(g: Graph) -> list[VertexSet]:
    """Nonempty complete sets, each a subset of some maximal clique,
    ordered smallest first with lexicographic ties."""
    found: set[VertexSet] = set()
    for clique in enumerate_maximal_cliques(g):
        for size in range(1, len(clique) + 1):
            found.update(itertools.combinations(clique, size))
    return sorted(found, key=lambda s: (len(s), s))


def find_clique_separator(g: Graph) -> tuple[VertexSet, list[VertexSet]] | None:
    """Smallest complete separator of a connected graph, with the parts
    of the remainder; lexicographic tie-break. None when g is an atom."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("input graph must be connected")
    for cand in _complete_subsets(g):
        rest = [v for v in range(g.n) if v not in cand]
        if not rest:
            continue
        sub, mapping = induced_subgraph(g, rest)
        comps = connected_components(sub)
        if len(comps) >= 2:
            return cand, [tuple(mapping[i] for i in comp) for comp in comps]
    return None


def decomposition_tree(g: Graph) -> CliqueDecomposition:
    """Recursive decomposition; each part keeps the separator vertices."""

    def build(vertices: VertexSet) -> SeparatorNode | AtomLeaf:
        sub, mapping = induced_subgraph(g, vertices)
        split = find_clique_separator(sub)
        if split is None:
            return AtomLeaf(vertices, sub)
        sep, parts = split
        sep_orig = tuple(mapping[i] for i in sep)
        children = tuple(
            build(tuple(sorted(sep_orig + tuple(mapping[i] for i in part))))
            for part in parts
        )
        return SeparatorNode(sep_orig, children)

    if g.n == 0 or not is_connected(g):
        raise ValueError("input graph must be connected")
    return CliqueDecomposition(g, build(tuple(range(g.n))))


def atoms(g: Graph) -> list[tuple[Graph, VertexSet]]:
    """Atom subgraphs with their vertex maps, in decomposition order."""
    return [(leaf.graph, leaf.vertices) for leaf in decomposition_tree(g).leaves()]


def tree_to_text(tree: CliqueDecomposition) -> str:
    lines: list[str] = []

    def walk(node: SeparatorNode | AtomLeaf, depth: int) -> None:
        pad = "  " * depth
        if isinstance(node, AtomLeaf):
            lines.append(pad + "atom: " + " ".join(map(str, node.vertices)))
        else:
            lines.append(pad + "separator: " + " ".join(map(str, node.separator)))
            for child in node.children:
                walk(child, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines) + "\n"


def tree_to_dot(tree: CliqueDecomposition, name: str = "decomposition") -> str:
    lines = [f"graph {name} {{"]
    counter = itertools.count()

    def walk(node: SeparatorNode | AtomLeaf) -> int:
        idx = next(counter)
        if isinstance(node, AtomLeaf):
            label = "atom " + " ".join(map(str, node.vertices))
            lines.append(f'  n{idx} [shape=box, label="{label}"];')
        else:
            label = "sep " + " ".join(map(str, node.separator))
            lines.append(f'  n{idx} [label="{label}"];')
            for child in node.children:
                cid = walk(child)
                lines.append(f"  n{idx} -- n{cid};")
        return idx

    walk(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"
