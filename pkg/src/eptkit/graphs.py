"""Core graph type and small-graph algorithms.

Vertices are integers 0..n-1. Graphs are immutable, hashable and always
simple (no loops, no parallel edges). Operations that return collections
return them in a fixed sorted order so repeated runs produce identical
output.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable

VertexSet = tuple[int, ...]
Edge = tuple[int, int]

CANONICAL_VERTEX_BOUND = 16


class GraphParseError(ValueError):
    """Malformed graph or representation text. `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BoundExceededError(ValueError):
    """An input is larger than the configured search bound."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(norm)
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._hash = hash((n, self.edges))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def parse_graph(text: str | bytes) -> Graph:
    """Parse the line-oriented graph format.

    Line 1 is "n m", followed by m lines "u v" with 0 <= u,v < n and
    u != v. Tokens are whitespace-separated, '#'-prefixed comment lines
    and blank lines are ignored. Raises GraphParseError naming the
    1-based line number of the first offending line.
    """
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    last_line = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphParseError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("expected header 'n m'", lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("header counts must be non-negative", lineno)
            header = (n, m)
            continue
        n, m = header
        if len(edges) >= m:
            raise GraphParseError(f"more than {m} edge lines", lineno)
        if len(parts) != 2:
            raise GraphParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("expected edge line 'u v'", lineno) from None
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphParseError(f"vertex {w} out of range for n={n}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("empty input, expected header 'n m'", last_line)
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"expected {m} edges, found {len(edges)}", last_line)
    return Graph(n, edges)


def graph_to_text(g: Graph, comments: Iterable[str] = ()) -> str:
    """Serialize a graph; edges come out sorted so output is canonical."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {len(g.edges)}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def is_complete_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the given vertices are pairwise adjacent in g."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def enumerate_maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques, each sorted, listed in lexicographic order.

    Bron-Kerbosch with pivoting; the pivot is the lowest-index vertex
    maximizing candidate coverage, which keeps the recursion
    deterministic.
    """
    if g.n == 0:
        return []
    adj = g._adj
    out: list[VertexSet] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = -1
        best = -1
        for u in sorted(p | x):
            c = len(p & adj[u])
            if c > best:
                best = c
                pivot = u
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand([], set(range(g.n)), set())
    out.sort()
    return out


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph plus the index map (new index -> old vertex)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(vs), edges), tuple(vs)


def find_chordless_cycle_ge(g: Graph, len_min: int = 4) -> VertexSet | None:
    """First chordless cycle with at least len_min vertices, in cycle order.

    Grows induced paths from each start vertex (the cycle minimum), so a
    returned cycle carries no chords by construction. Exponential in the
    worst case, fine at the intended scale.
    """
    if len_min < 4:
        raise ValueError("len_min must be at least 4")
    adj = g._adj

    def extend(path: list[int], on_path: set[int]) -> VertexSet | None:
        s = path[0]
        last = path[-1]
        interior = path[1:-1]
        for u in sorted(adj[last]):
            if u <= s or u in on_path:
                continue
            if any(u in adj[w] for w in interior):
                continue
            if len(path) >= 2 and u in adj[s]:
                if len(path) + 1 >= len_min:
                    return tuple(path + [u])
                # closing chord makes any longer cycle through u impossible
                continue
            path.append(u)
            on_path.add(u)
            found = extend(path, on_path)
            if found is not None:
                return found
            path.pop()
            on_path.remove(u)
        return None

    for s in range(g.n):
        found = extend([s], {s})
        if found is not None:
            return found
    return None


def _wl_colors(g: Graph) -> list[int]:
    """Iterated neighborhood refinement; ranks are isomorphism-invariant."""
    ranks = {d: i for i, d in enumerate(sorted({g.degree(v) for v in range(g.n)}))}
    colors = [ranks[g.degree(v)] for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g._adj[v])))
            for v in range(g.n)
        ]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[sigs[v]] for v in range(g.n)]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


@functools.lru_cache(maxsize=262144)
def canonical_labeling(g: Graph, bound: int = CANONICAL_VERTEX_BOUND) -> tuple[bytes, VertexSet]:
    """Canonical form plus one vertex order that realizes it.

    The form is the maximal adjacency bitstring over an
    isomorphism-invariant family of orders: refinement colors narrow the
    candidates, branch-and-bound keeps only orders whose next adjacency
    row is maximal, and interchangeable twin vertices are collapsed.
    Two graphs get equal forms exactly when they are isomorphic.
    """
    n = g.n
    if n > bound:
        raise BoundExceededError(f"canonical form limited to {bound} vertices, got {n}")
    if n == 0:
        return bytes([0]), ()
    colors = _wl_colors(g)
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u

    best_bits: list[int] | None = None
    best_order: list[int] | None = None

    def pattern(mask: int, order: list[int]) -> int:
        pat = 0
        for w in order:
            pat = (pat << 1) | (mask >> w & 1)
        return pat

    def search(order: list[int], placed: int, bits: list[int]) -> None:
        nonlocal best_bits, best_order
        depth = len(order)
        if depth == n:
            if best_bits is None or bits > best_bits:
                best_bits = list(bits)
                best_order = list(order)
            return
        cands = []
        for v in range(n):
            if not placed >> v & 1:
                cands.append((pattern(adj_mask[v], order), -colors[v], v))
        top = max(c[:2] for c in cands)
        branch = [v for p, c, v in cands if (p, c) == top]
        # keep one representative per group of interchangeable twins
        reps: list[int] = []
        for v in branch:
            if not any(
                adj_mask[v] & ~(1 << u) == adj_mask[u] & ~(1 << v) for u in reps
            ):
                reps.append(v)
        seg = [top[0] >> (depth - 1 - i) & 1 for i in range(depth)]
        bits.extend(seg)
        # prune only when strictly below the current best prefix
        if best_bits is None or bits >= best_bits[: len(bits)]:
            for v in reps:
                order.append(v)
                search(order, placed | (1 << v), bits)
                order.pop()
        del bits[len(bits) - len(seg):]

    search([], 0, [])
    assert best_bits is not None and best_order is not None
    value = 0
    for b in best_bits:
        value = (value << 1) | b
    nbits = n * (n - 1) // 2
    form = bytes([n]) + value.to_bytes((nbits + 7) // 8 or 1, "big")
    return form, tuple(best_order)


def canonical_form(g: Graph, bound: int = CANONICAL_VERTEX_BOUND) -> bytes:
    """Bytes equal for two graphs exactly when they are isomorphic."""
    return canonical_labeling(g, bound)[0]


def isomorphism(g1: Graph, g2: Graph, bound: int = CANONICAL_VERTEX_BOUND) -> dict[int, int] | None:
    """A vertex map g1 -> g2 if the graphs are isomorphic, else None."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    f1, o1 = canonical_labeling(g1, bound)
    f2, o2 = canonical_labeling(g2, bound)
    if f1 != f2:
        return None
    return {o1[p]: o2[p] for p in range(g1.n)}
