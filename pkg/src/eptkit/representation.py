"""Host-tree representations of graphs by edge-intersecting paths.

A representation pairs a host tree with one path per graph vertex; two
vertices are adjacent exactly when their paths share a tree edge. For a
tree edge e, the edge set K_e collects the vertices whose paths contain
e; for a claw (three tree edges at one center) the set K_Y collects the
vertices whose paths contain two of its spokes. Every maximal clique of
the derived graph is one of these two kinds, and a representation is
Helly precisely when no maximal clique needs a claw witness.

Pies are the unique representation shape of chordless cycles: a star
with as many spokes as the cycle, each path covering two consecutive
spokes. Multipies generalize pies and are exactly the shape forced by
gates. Gates conversely always admit a star-host representation with
one spoke per maximal clique, built here by star_representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .gates import LabeledGate, _base_cycle, _extend
from .graphs import (
    Edge,
    Graph,
    GraphParseError,
    VertexSet,
    enumerate_maximal_cliques,
    is_connected,
    isomorphism,
)


class HostTree:
    """Tree on vertices 0..n-1, validated at construction."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges) -> None:
        g = Graph(n, edges)
        if n > 0 and (len(g.edges) != n - 1 or not is_connected(g)):
            raise ValueError("host tree must be connected and acyclic")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(g.edges))
        self._adj = g._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HostTree)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"HostTree({self.n}, {list(self.edges)})"


TreePath = tuple[int, ...]


def _path_edges(path: TreePath) -> frozenset[Edge]:
    return frozenset(
        (a, b) if a < b else (b, a) for a, b in zip(path, path[1:])
    )


@dataclass(frozen=True)
class EptRepresentation:
    """Paths in a host tree, indexed by graph vertex.

    A path is a tree-vertex sequence; a single-vertex path has no edges
    and represents an isolated vertex.
    """

    tree: HostTree
    paths: tuple[TreePath, ...]

    def __post_init__(self) -> None:
        for v, path in enumerate(self.paths):
            if not path:
                raise ValueError(f"path of vertex {v} is empty")
            if len(set(path)) != len(path):
                raise ValueError(f"path of vertex {v} repeats a tree vertex")
            for q in path:
                if not 0 <= q < self.tree.n:
                    raise ValueError(f"path of vertex {v} leaves the tree: {q}")
            for a, b in zip(path, path[1:]):
                if not self.tree.has_edge(a, b):
                    raise ValueError(
                        f"path of vertex {v} uses non-edge ({a}, {b})"
                    )

    @cached_property
    def path_edge_sets(self) -> tuple[frozenset[Edge], ...]:
        return tuple(_path_edges(p) for p in self.paths)


@dataclass(frozen=True)
class EdgeClique:
    edge: Edge


@dataclass(frozen=True)
class ClawClique:
    center: int
    ends: tuple[int, int, int]


@dataclass(frozen=True)
class PieWitness:
    """Star at center with spoke ends q_1..q_k; the path of cycle[i]
    covers the spokes to spoke_ends[i] and spoke_ends[i+1], cyclically."""

    center: int
    spoke_ends: tuple[int, ...]
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class MultipieWitness:
    """Star at center with k spoke ends; members pairs each graph vertex
    with the two spoke ends its path covers."""

    center: int
    spoke_ends: tuple[int, ...]
    members: tuple[tuple[int, tuple[int, int]], ...]


def edge_intersection_graph(rep: EptRepresentation) -> Graph:
    """Graph on the path indices, adjacent iff paths share a tree edge."""
    sets = rep.path_edge_sets
    n = len(sets)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if sets[u] & sets[v]
    ]
    return Graph(n, edges)


def verify(rep: EptRepresentation, g: Graph) -> tuple[bool, str | None]:
    """Whether the representation derives exactly g; reports the first
    discrepancy in vertex order otherwise."""
    if len(rep.paths) != g.n:
        raise ValueError(
            f"representation has {len(rep.paths)} paths, graph has {g.n} vertices"
        )
    sets = rep.path_edge_sets
    for u in range(g.n):
        for v in range(u + 1, g.n):
            shared = sets[u] & sets[v]
            if g.has_edge(u, v) and not shared:
                return False, f"vertices {u} and {v}: adjacent but paths share no tree edge"
            if not g.has_edge(u, v) and shared:
                e = min(shared)
                return False, f"vertices {u} and {v}: non-adjacent but paths share tree edge {e}"
    return True, None


def max_host_degree(rep: EptRepresentation) -> int:
    return rep.tree.max_degree()


def clique_of_edge(rep: EptRepresentation, e: Edge) -> VertexSet:
    """K_e: the vertices whose paths contain tree edge e."""
    a, b = e
    key = (a, b) if a < b else (b, a)
    if key not in rep.tree.edges:
        raise ValueError(f"edge {e} not in host tree")
    return tuple(v for v, s in enumerate(rep.path_edge_sets) if key in s)


def clique_of_claw(
    rep: EptRepresentation, center: int, spokes
) -> VertexSet:
    """K_Y: the vertices whose paths contain at least two of the three
    spoke edges of the claw at center."""
    spokes = tuple(spokes)
    if len(spokes) != 3:
        raise ValueError("a claw has exactly 3 spokes")
    norm = []
    for e in spokes:
        a, b = e
        if center not in (a, b):
            raise ValueError(f"spoke {e} does not touch center {center}")
        key = (a, b) if a < b else (b, a)
        if key not in rep.tree.edges:
            raise ValueError(f"spoke {e} not in host tree")
        norm.append(key)
    if len(set(norm)) != 3:
        raise ValueError("claw spokes must be distinct")
    return tuple(
        v
        for v, s in enumerate(rep.path_edge_sets)
        if sum(e in s for e in norm) >= 2
    )


def _claw_pair_at(rep: EptRepresentation, v: int, center: int) -> tuple[int, int] | None:
    """The two tree neighbors of center covered by v's path as it passes
    through, or None when the path misses center or stops there."""
    path = rep.paths[v]
    try:
        i = path.index(center)
    except ValueError:
        return None
    if i == 0 or i == len(path) - 1:
        return None
    a, b = path[i - 1], path[i + 1]
    return (a, b) if a < b else (b, a)


def find_claw_violation(
    rep: EptRepresentation, subset: VertexSet | None = None
) -> tuple[ClawClique, tuple[int, int, int]] | None:
    """Three paths forming a claw: a degree-3 star of the tree whose
    three spoke pairs are each covered by one of the paths. Returns the
    claw and the covering vertices, or None. Scans centers ascending."""
    vertices = range(len(rep.paths)) if subset is None else subset
    for center in range(rep.tree.n):
        if rep.tree.degree(center) < 3:
            continue
        covered: dict[tuple[int, int], int] = {}
        for v in vertices:
            pair = _claw_pair_at(rep, v, center)
            if pair is not None and pair not in covered:
                covered[pair] = v
        ends = sorted({q for pair in covered for q in pair})
        for x, y, z in itertools.combinations(ends, 3):
            if (x, y) in covered and (x, z) in covered and (y, z) in covered:
                claw = ClawClique(center, (x, y, z))
                return claw, (covered[(x, y)], covered[(x, z)], covered[(y, z)])
    return None


def classify_clique(
    rep: EptRepresentation, c: VertexSet
) -> EdgeClique | ClawClique:
    """Witness for a maximal clique c: a tree edge e with K_e = c when
    one exists, else a claw Y with K_Y = c. Raises when c is not a
    maximal clique, or when no witness exists (which would contradict
    the clique structure of edge-intersection representations and
    signals a broken input)."""
    g = edge_intersection_graph(rep)
    target = tuple(sorted(c))
    if target not in enumerate_maximal_cliques(g):
        raise ValueError(f"{c} is not a maximal clique of the derived graph")
    for e in rep.tree.edges:
        if clique_of_edge(rep, e) == target:
            return EdgeClique(e)
    for center in range(rep.tree.n):
        if rep.tree.degree(center) < 3:
            continue
        for ends in itertools.combinations(sorted(rep.tree.neighbors(center)), 3):
            spokes = [(center, q) for q in ends]
            if clique_of_claw(rep, center, spokes) == target:
                return ClawClique(center, ends)
    raise RuntimeError(f"no edge or claw witness for clique {c}: broken representation")


def is_helly(rep: EptRepresentation) -> tuple[bool, VertexSet | None]:
    """Whether the paths' edge sets satisfy the Helly property; returns
    the first violating maximal clique otherwise.

    Criterion: every maximal clique of the derived graph is an
    edge-clique. Sound because a pairwise edge-intersecting subfamily is
    a complete set, so it lies inside some maximal clique C; when
    C = K_e all its paths share e. Conversely a claw-clique contains
    three paths forming a claw, which pairwise intersect with no common
    edge.
    """
    g = edge_intersection_graph(rep)
    for c in enumerate_maximal_cliques(g):
        if isinstance(classify_clique(rep, c), ClawClique):
            return False, c
    return True, None


def _spoke_ends_on_path(rep: EptRepresentation, v: int, center: int) -> set[int]:
    return set(rep.paths[v]) & set(rep.tree.neighbors(center))


def find_pie(rep: EptRepresentation, cycle: VertexSet) -> PieWitness:
    """Pie witness for a chordless cycle, given in cyclic vertex order.

    Scans candidate centers ascending; the spoke order is forced by the
    consecutive path intersections once a center is fixed.
    """
    k = len(cycle)
    if k < 4:
        raise ValueError("a pie needs a cycle of length at least 4")
    g = edge_intersection_graph(rep)
    for i, v in enumerate(cycle):
        for j in range(i + 1, k):
            adjacent = g.has_edge(v, cycle[j])
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                raise ValueError("cycle argument is not a chordless cycle in the derived graph")
    for center in range(rep.tree.n):
        if rep.tree.degree(center) < k:
            continue
        ends = [_spoke_ends_on_path(rep, v, center) for v in cycle]
        if any(len(a) != 2 for a in ends):
            continue
        shared = [ends[i] & ends[(i + 1) % k] for i in range(k)]
        if any(len(s) != 1 for s in shared):
            continue
        # spoke_ends[i] is shared by the paths of cycle[i-1] and cycle[i]
        spokes = tuple(next(iter(shared[i - 1])) for i in range(k))
        if len(set(spokes)) != k:
            continue
        if all(ends[i] == {spokes[i], spokes[(i + 1) % k]} for i in range(k)):
            return PieWitness(center, spokes, tuple(cycle))
    raise RuntimeError("no pie found: broken representation or bad cycle")


def find_multipie(
    rep: EptRepresentation, gate_vertices: VertexSet, k: int
) -> MultipieWitness:
    """Multipie witness of size k over the paths of an induced k-gate.

    A valid witness satisfies: every member path covers exactly two of
    the k spoke ends; no two members cover the same pair; every spoke
    end is covered by at least two members; no three members form a
    claw. Scans candidate centers ascending; the spoke set is forced to
    be the union of the members' covered neighbor pairs.
    """
    from .gates import is_gate
    from .graphs import induced_subgraph

    g = edge_intersection_graph(rep)
    sub, _ = induced_subgraph(g, gate_vertices)
    recipe = is_gate(sub, max_vertices=max(12, sub.n))
    if recipe is None or recipe.clique_count() != k:
        raise ValueError(f"vertices {gate_vertices} do not induce a {k}-gate")
    members = tuple(sorted(gate_vertices))
    for center in range(rep.tree.n):
        if rep.tree.degree(center) < k:
            continue
        ends = {v: _spoke_ends_on_path(rep, v, center) for v in members}
        if any(len(a) != 2 for a in ends.values()):
            continue
        spoke_set = set().union(*ends.values())
        if len(spoke_set) != k:
            continue
        pairs = {v: tuple(sorted(ends[v])) for v in members}
        if len(set(pairs.values())) != len(members):
            continue
        coverage = {q: sum(q in a for a in ends.values()) for q in spoke_set}
        if any(c < 2 for c in coverage.values()):
            continue
        if find_claw_violation(rep, members) is not None:
            continue
        return MultipieWitness(
            center,
            tuple(sorted(spoke_set)),
            tuple((v, pairs[v]) for v in members),
        )
    raise RuntimeError("no multipie found: broken representation or bad gate")


def parse_representation(text: str) -> EptRepresentation:
    """Parse the line format: "t_n t_m" header, t_m tree-edge lines
    "a b", then one line "v : p_0 p_1 ..." per graph vertex. Blank
    lines and '#' comments are skipped."""
    rows = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise GraphParseError("empty representation", line=1)
    line_no, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphParseError(f"malformed header {header!r}", line=line_no)
    t_n, t_m = int(parts[0]), int(parts[1])
    if len(rows) - 1 < t_m:
        raise GraphParseError(f"expected {t_m} tree edges", line=rows[-1][0])
    edges = []
    for line_no, row in rows[1 : 1 + t_m]:
        parts = row.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"malformed edge line {row!r}", line=line_no)
        edges.append((int(parts[0]), int(parts[1])))
    try:
        tree = HostTree(t_n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc), line=rows[0][0]) from exc
    path_rows = rows[1 + t_m :]
    seen: dict[int, TreePath] = {}
    for line_no, row in path_rows:
        head, sep, rest = row.partition(":")
        if not sep or not head.strip().isdigit():
            raise GraphParseError(f"malformed path line {row!r}", line=line_no)
        v = int(head.strip())
        if v in seen:
            raise GraphParseError(f"duplicate path for vertex {v}", line=line_no)
        fields = rest.split()
        if not fields or not all(p.isdigit() for p in fields):
            raise GraphParseError(f"malformed path line {row!r}", line=line_no)
        seen[v] = tuple(int(p) for p in fields)
    if sorted(seen) != list(range(len(seen))):
        missing = next(i for i in range(len(seen) + 1) if i not in seen)
        raise GraphParseError(
            f"missing path for vertex {missing}", line=rows[-1][0]
        )
    paths = tuple(seen[v] for v in range(len(seen)))
    try:
        return EptRepresentation(tree, paths)
    except ValueError as exc:
        raise GraphParseError(str(exc), line=rows[-1][0]) from exc


def representation_to_text(rep: EptRepresentation, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{rep.tree.n} {len(rep.tree.edges)}")
    lines.extend(f"{a} {b}" for a, b in rep.tree.edges)
    lines.extend(
        f"{v} : " + " ".join(str(q) for q in path)
        for v, path in enumerate(rep.paths)
    )
    return "\n".join(lines) + "\n"


def representation_to_dot(rep: EptRepresentation) -> str:
    """Host tree in DOT, each edge annotated with the graph vertices
    whose paths use it."""
    lines = ["graph host {"]
    for q in range(rep.tree.n):
        lines.append(f"  t{q} [label=\"{q}\"];")
    for a, b in rep.tree.edges:
        users = ",".join(
            str(v) for v, s in enumerate(rep.path_edge_sets) if (a, b) in s
        )
        label = f" [label=\"{users}\"]" if users else ""
        lines.append(f"  t{a} -- t{b}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def star_representation(gate: LabeledGate) -> EptRepresentation:
    """Helly representation of a k-gate on a star host with k spokes.

    Replays the recipe. The base cycle becomes a pie; each extension
    adds one new spoke per new clique: with e and e' the spokes of the
    two extended cliques and e_1..e_{l-1} the new spokes, the first path
    covers (e, e_1), interior path i covers (e_{i-1}, e_i), and the last
    covers (e_{l-1}, e'). Every maximal clique ends up as K_e of its own
    spoke, so the result is Helly.
    """
    recipe = gate.recipe
    graph, cliques = _base_cycle(recipe.base)
    # Spokes are numbered from 1; leaf i+1 closes the pie between the
    # paths of cycle vertices i-1 and i.
    spoke_of: dict[VertexSet, int] = {}
    paths: list[TreePath] = []
    b = recipe.base
    for i in range(b):
        paths.append((i + 1, 0, (i + 1) % b + 1))
        spoke_of[tuple(sorted((i, (i + 1) % b)))] = (i + 1) % b + 1
    leaf_count = b
    for step in recipe.steps:
        old_a = cliques[step.clique_a]
        old_b = cliques[step.clique_b]
        e = spoke_of.pop(old_a)
        e2 = spoke_of.pop(old_b)
        graph, cliques, fresh = _extend(graph, cliques, step)
        new_leaves = list(range(leaf_count + 1, leaf_count + step.path_len))
        leaf_count += step.path_len - 1
        rail = [e, *new_leaves, e2]
        for v, (left, right) in zip(fresh, itertools.pairwise(rail)):
            paths.append((left, 0, right))
        for i in range(step.path_len - 1):
            spoke_of[tuple(sorted((fresh[i], fresh[i + 1])))] = new_leaves[i]
        spoke_of[tuple(sorted(old_a + (fresh[0],)))] = e
        spoke_of[tuple(sorted(old_b + (fresh[-1],)))] = e2
    assert set(spoke_of) == set(cliques)
    tree = HostTree(
        leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)]
    )
    rep = EptRepresentation(tree, tuple(paths))
    if gate.graph == graph:
        return rep
    relabel = isomorphism(graph, gate.graph)
    if relabel is None:
        raise ValueError("gate graph does not match its recipe")
    relabeled: list[TreePath] = [()] * graph.n
    for v in range(graph.n):
        relabeled[relabel[v]] = paths[v]
    return EptRepresentation(tree, tuple(relabeled))
