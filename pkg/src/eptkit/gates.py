"""Gate construction, cataloging and detection.

A gate is built recursively: the base is a chordless cycle on at least
four vertices, and each extension step picks two disjoint maximal
cliques C and C' of the current gate, adds a fresh chordless path
v_1..v_l with l >= 2, and joins v_1 to all of C and v_l to all of C'.
The maximal cliques of the result are the old cliques other than C and
C', the path cliques {v_i, v_i+1}, and the enlarged ends C + {v_1} and
C' + {v_l}; recipes index cliques by position in that re-derived sorted
list, which makes them replayable. A gate with k maximal cliques is
called a k-gate; every vertex of a gate lies in exactly two maximal
cliques whose intersection is that vertex alone.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass

from .graphs import (
    BoundExceededError,
    Graph,
    VertexSet,
    canonical_form,
    cycle_graph,
    enumerate_maximal_cliques,
    is_connected,
)

CATALOG_VERTEX_BOUND = 12


@dataclass(frozen=True)
class ExtensionStep:
    """One extension: clique indices into the current clique list plus
    the length of the attached path."""

    clique_a: int
    clique_b: int
    path_len: int


@dataclass(frozen=True)
class GateRecipe:
    """Replayable construction record: base cycle length plus steps."""

    base: int
    steps: tuple[ExtensionStep, ...] = ()

    def clique_count(self) -> int:
        return self.base + sum(s.path_len - 1 for s in self.steps)

    def vertex_count(self) -> int:
        return self.base + sum(s.path_len for s in self.steps)


@dataclass(frozen=True)
class LabeledGate:
    """A gate graph together with its sorted maximal clique list and the
    recipe it was cataloged under. The recipe describes the construction
    of an isomorphic copy; for gates built by build_gate the labeling
    matches the replay exactly."""

    graph: Graph
    cliques: tuple[VertexSet, ...]
    recipe: GateRecipe


def _base_cycle(base: int) -> tuple[Graph, tuple[VertexSet, ...]]:
    if base < 4:
        raise ValueError("gate base cycle needs at least 4 vertices")
    g = cycle_graph(base)
    return g, tuple(enumerate_maximal_cliques(g))


def _extend(
    graph: Graph, cliques: tuple[VertexSet, ...], step: ExtensionStep
) -> tuple[Graph, tuple[VertexSet, ...], list[int]]:
    """Apply one extension step; returns the new graph, the re-derived
    sorted clique list and the freshly added path vertices."""
    k = len(cliques)
    for idx in (step.clique_a, step.clique_b):
        if not 0 <= idx < k:
            raise ValueError(f"clique id {idx} out of range, gate has {k} cliques")
    if step.clique_a == step.clique_b:
        raise ValueError("extension needs two distinct cliques")
    if step.path_len < 2:
        raise ValueError("extension path length must be at least 2")
    a = set(cliques[step.clique_a])
    b = set(cliques[step.clique_b])
    if a & b:
        raise ValueError(
            f"cliques {cliques[step.clique_a]} and {cliques[step.clique_b]} are not disjoint"
        )
    n0 = graph.n
    fresh = list(range(n0, n0 + step.path_len))
    edges = set(graph.edges)
    edges.update((fresh[i], fresh[i + 1]) for i in range(step.path_len - 1))
    edges.update((u, fresh[0]) for u in a)
    edges.update((u, fresh[-1]) for u in b)
    new_graph = Graph(n0 + step.path_len, edges)
    derived = [c for i, c in enumerate(cliques) if i not in (step.clique_a, step.clique_b)]
    derived.extend(
        tuple(sorted((fresh[i], fresh[i + 1]))) for i in range(step.path_len - 1)
    )
    derived.append(tuple(sorted(a | {fresh[0]})))
    derived.append(tuple(sorted(b | {fresh[-1]})))
    return new_graph, tuple(sorted(derived)), fresh


def build_gate(recipe: GateRecipe) -> LabeledGate:
    """Replay a recipe into a concrete labeled gate.

    Vertices are numbered in construction order: 0..base-1 around the
    cycle, then each step's path vertices in path order.
    """
    graph, cliques = _base_cycle(recipe.base)
    for step in recipe.steps:
        graph, cliques, _ = _extend(graph, cliques, step)
    enumerated = tuple(enumerate_maximal_cliques(graph))
    if enumerated != cliques:
        raise RuntimeError("derived clique list disagrees with enumeration")
    return LabeledGate(graph, cliques, recipe)


def check_two_clique_property(g: Graph) -> tuple[bool, int | None]:
    """Whether every vertex lies in exactly two maximal cliques meeting
    only in that vertex; returns the first violating vertex otherwise."""
    cliques = enumerate_maximal_cliques(g)
    for v in range(g.n):
        holding = [set(c) for c in cliques if v in c]
        if len(holding) != 2 or holding[0] & holding[1] != {v}:
            return False, v
    return True, None


@functools.lru_cache(maxsize=8)
def _catalog(max_vertices: int) -> dict[bytes, GateRecipe]:
    catalog: dict[bytes, GateRecipe] = {}
    queue: deque[LabeledGate] = deque()
    for base in range(4, max_vertices + 1):
        gate = build_gate(GateRecipe(base))
        form = canonical_form(gate.graph)
        if form not in catalog:
            catalog[form] = gate.recipe
            queue.append(gate)
    while queue:
        gate = queue.popleft()
        k = len(gate.cliques)
        budget = max_vertices - gate.graph.n
        if budget < 2:
            continue
        for a in range(k):
            for b in range(a + 1, k):
                if set(gate.cliques[a]) & set(gate.cliques[b]):
                    continue
                for length in range(2, budget + 1):
                    step = ExtensionStep(a, b, length)
                    graph, cliques, _ = _extend(gate.graph, gate.cliques, step)
                    form = canonical_form(graph)
                    if form in catalog:
                        continue
                    recipe = GateRecipe(gate.recipe.base, gate.recipe.steps + (step,))
                    catalog[form] = recipe
                    queue.append(LabeledGate(graph, cliques, recipe))
    return catalog


def enumerate_gates(max_vertices: int = CATALOG_VERTEX_BOUND, limit: int = CATALOG_VERTEX_BOUND) -> dict[bytes, GateRecipe]:
    """Catalog of every gate with at most max_vertices vertices, keyed
    by canonical form. Breadth-first over recipes with canonical
    dedup, so construction order is deterministic."""
    if max_vertices > limit:
        raise BoundExceededError(
            f"gate catalog limited to {limit} vertices, asked for {max_vertices}"
        )
    return dict(_catalog(max_vertices))


def is_gate(g: Graph, max_vertices: int = CATALOG_VERTEX_BOUND) -> GateRecipe | None:
    """The catalog recipe for g's isomorphism class, if g is a gate."""
    if g.n > max_vertices:
        raise BoundExceededError(
            f"gate lookup limited to {max_vertices} vertices, got {g.n}"
        )
    if g.n < 4 or not is_connected(g):
        return None
    if any(g.degree(v) < 2 for v in range(g.n)):
        return None
    return _catalog(max_vertices).get(canonical_form(g))


def rewire_gate(gate: LabeledGate, v: int, t: int) -> LabeledGate:
    """Replace vertex v by a path w_1..w_t joined to v's two cliques.

    v's maximal cliques C1 and C2 (there are exactly two) lose v; w_1 is
    joined to all of C1 - v and w_t to all of C2 - v. The survivors keep
    their relative order and the path vertices come last. The result is
    again a gate; its catalog recipe is attached.
    """
    g = gate.graph
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if t < 2:
        raise ValueError("replacement path needs at least 2 vertices")
    holding = [set(c) for c in gate.cliques if v in c]
    if len(holding) != 2:
        raise ValueError(f"vertex {v} is not in exactly two cliques")
    c1, c2 = sorted((tuple(sorted(c)) for c in holding))
    keep = [u for u in range(g.n) if u != v]
    pos = {u: i for i, u in enumerate(keep)}
    n_new = len(keep) + t
    first = len(keep)
    edges = [(pos[a], pos[b]) for a, b in g.edges if a != v and b != v]
    edges.extend((first + i, first + i + 1) for i in range(t - 1))
    edges.extend((pos[u], first) for u in c1 if u != v)
    edges.extend((pos[u], first + t - 1) for u in c2 if u != v)
    rewired = Graph(n_new, edges)
    recipe = is_gate(rewired, max_vertices=max(CATALOG_VERTEX_BOUND, n_new))
    if recipe is None:
        raise RuntimeError("rewiring failed to produce a cataloged gate")
    return LabeledGate(rewired, tuple(enumerate_maximal_cliques(rewired)), recipe)


def contains_gate_ge(
    g: Graph, h: int, max_vertices: int = CATALOG_VERTEX_BOUND
) -> tuple[VertexSet, GateRecipe] | None:
    """First induced k-gate with k > h, scanning vertex subsets by size
    then lexicographic order. None when no such gate is induced."""
    if g.n > max_vertices:
        raise BoundExceededError(
            f"gate search limited to {max_vertices} vertices, got {g.n}"
        )
    import itertools

    from .graphs import induced_subgraph

    for size in range(max(4, h + 1), g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sub, mapping = induced_subgraph(g, subset)
            if any(sub.degree(i) < 2 for i in range(sub.n)):
                continue
            recipe = is_gate(sub, max_vertices)
            if recipe is not None and recipe.clique_count() > h:
                return mapping, recipe
    return None
