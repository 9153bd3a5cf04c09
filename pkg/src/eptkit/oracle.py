"""Brute-force ground truth: host-tree enumeration, representation
search, and exhaustive small-graph corpora.

The membership search runs over "bijection trees": host trees whose
edges are in one-to-one correspondence with the maximal cliques of the
input graph. Soundness and completeness of that normal form: in any
Helly representation every maximal clique C equals K_e for some tree
edge e, distinct cliques get distinct edges, and contracting all
unchosen edges leaves each path being exactly the edges of its
vertex's cliques. The search therefore assigns cliques to tree edges
and accepts when every vertex's span (the minimal subtree covering its
cliques' edges) is a path and spans of non-adjacent vertices share no
edge; accepted assignments are Helly representations verbatim.

Tree candidates are scanned as unlabeled shapes in ascending order of
maximum degree, so the first accepting shape realizes the minimum host
degree over all bijection trees and one scan per graph answers every
bounded membership query. The public tree stream, by contrast,
enumerates labeled trees in Prüfer order; it exists as independent
plumbing for tests and the CLI.
"""

from __future__ import annotations

import functools
import os
import time
from collections.abc import Iterator
from dataclasses import dataclass

from .graphs import (
    BoundExceededError,
    Graph,
    VertexSet,
    canonical_form,
    enumerate_maximal_cliques,
    is_connected,
)
from .representation import EptRepresentation, HostTree, TreePath

DEFAULT_TREE_EDGE_BOUND = 9
CORPUS_VERTEX_BOUND = 7


class BudgetExhaustedError(RuntimeError):
    """The wall-clock budget ran out before the search space did."""


def default_budget_secs() -> float:
    return float(os.environ.get("EPTKIT_BUDGET_SECS", "60"))


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    import heapq

    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def enumerate_trees(
    m: int,
    max_degree: int | None = None,
    limit: int = DEFAULT_TREE_EDGE_BOUND,
) -> Iterator[HostTree]:
    """All labeled trees with m edges in Prüfer-sequence order,
    optionally filtered to maximum degree; (m+1)^(m-1) trees without
    the filter."""
    if m < 1:
        raise ValueError("need at least one edge")
    if m > limit:
        raise BoundExceededError(f"tree enumeration limited to {limit} edges, asked for {m}")
    n = m + 1
    cap = None if max_degree is None else max_degree - 1
    counts = [0] * n

    def emit(seq: list[int]) -> Iterator[HostTree]:
        if len(seq) == m - 1:
            tree = HostTree(n, _prufer_decode(tuple(seq), n))
            if max_degree is None or tree.max_degree() <= max_degree:
                yield tree
            return
        for v in range(n):
            if cap is not None and counts[v] >= cap:
                continue
            counts[v] += 1
            seq.append(v)
            yield from emit(seq)
            seq.pop()
            counts[v] -= 1

    return emit([])


class TreeShape:
    """One unlabeled host-tree shape, pinned as a labeled representative
    with precomputed edge-index masks for the assignment search."""

    __slots__ = ("graph", "n", "m", "edges", "max_degree", "incident", "path_mask", "_path_memo")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.edges = tuple(sorted(graph.edges))
        self.m = len(self.edges)
        self.max_degree = max((graph.degree(v) for v in range(graph.n)), default=0)
        index = {e: i for i, e in enumerate(self.edges)}
        self.incident = [0] * self.n
        for i, (a, b) in enumerate(self.edges):
            self.incident[a] |= 1 << i
            self.incident[b] |= 1 << i
        # path_mask[a][b]: edge-index mask of the tree path from a to b
        self.path_mask = [[0] * self.n for _ in range(self.n)]
        for root in range(self.n):
            stack = [root]
            seen = {root}
            while stack:
                u = stack.pop()
                for w in graph.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        e = index[(u, w) if u < w else (w, u)]
                        self.path_mask[root][w] = self.path_mask[root][u] | 1 << e
                        stack.append(w)
        self._path_memo: dict[int, bool] = {}

    def span_is_path(self, mask: int) -> bool:
        """Whether a span mask (connected by construction) has maximum
        degree 2, i.e. forms a path."""
        cached = self._path_memo.get(mask)
        if cached is None:
            cached = all(
                (mask & inc).bit_count() <= 2 for inc in self.incident
            )
            self._path_memo[mask] = cached
        return cached


@functools.lru_cache(maxsize=32)
def tree_shapes(m: int) -> tuple[TreeShape, ...]:
    """All unlabeled trees with m edges, sorted by (max degree,
    canonical form) so low-degree hosts come first."""
    if m == 0:
        return (TreeShape(Graph(1)),)
    grown: dict[bytes, Graph] = {}
    for shape in tree_shapes(m - 1):
        g = shape.graph
        for v in range(g.n):
            h = Graph(g.n + 1, list(g.edges) + [(v, g.n)])
            form = canonical_form(h)
            if form not in grown:
                grown[form] = h
    shapes = [TreeShape(g) for g in grown.values()]
    shapes.sort(key=lambda s: (s.max_degree, canonical_form(s.graph)))
    return tuple(shapes)


def _clique_order(cliques: tuple[VertexSet, ...]) -> list[int]:
    """Assignment order: grow a connected front over shared vertices so
    span pruning bites early; lexicographic tie-break."""
    remaining = set(range(len(cliques)))
    placed: set[int] = set()
    order = []
    while remaining:
        linked = [i for i in sorted(remaining) if placed & set(cliques[i])]
        nxt = linked[0] if linked else min(remaining)
        order.append(nxt)
        remaining.remove(nxt)
        placed.update(cliques[nxt])
    return order


class _Deadline:
    __slots__ = ("at", "ticks")

    def __init__(self, budget_secs: float):
        self.at = time.monotonic() + budget_secs
        self.ticks = 0

    def check(self) -> None:
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.at:
            raise BudgetExhaustedError("representation search budget exhausted")


def _assign_cliques(
    shape: TreeShape,
    cliques: tuple[VertexSet, ...],
    order: list[int],
    adj_self: list[int],
    deadline: _Deadline,
) -> list[int] | None:
    """Backtracking bijection cliques -> tree edges; returns the span
    mask per graph vertex on success."""
    n_g = len(adj_self)
    spans = [0] * n_g
    anchors = [-1] * n_g
    covered = [0] * shape.m
    used = 0

    # journal entries: (0, edge, vertex) = coverage bit to clear;
    # (1, vertex, old span) = span to restore
    def place(ci: int, j: int, journal: list[tuple[int, int, int]]) -> bool:
        a, b = shape.edges[j]
        for v in cliques[ci]:
            old = spans[v]
            if anchors[v] < 0:
                anchors[v] = a
                new = 1 << j
            else:
                w0 = anchors[v]
                new = old | shape.path_mask[w0][a] | shape.path_mask[w0][b]
            if new != old and not shape.span_is_path(new):
                return False
            delta = new & ~old
            bit = 1 << v
            while delta:
                e = (delta & -delta).bit_length() - 1
                if covered[e] & ~adj_self[v]:
                    return False
                covered[e] |= bit
                journal.append((0, e, v))
                delta &= delta - 1
            if new != old:
                journal.append((1, v, old))
                spans[v] = new
        return True

    def undo(journal: list[tuple[int, int, int]], fresh_anchor: list[int]) -> None:
        for kind, x, y in reversed(journal):
            if kind == 0:
                covered[x] &= ~(1 << y)
            else:
                spans[x] = y
        for v in fresh_anchor:
            anchors[v] = -1

    def search(i: int) -> bool:
        nonlocal used
        deadline.check()
        if i == len(order):
            return True
        ci = order[i]
        for j in range(shape.m):
            if used >> j & 1:
                continue
            journal: list[tuple[int, int, int]] = []
            fresh = [v for v in cliques[ci] if anchors[v] < 0]
            used |= 1 << j
            if place(ci, j, journal) and search(i + 1):
                return True
            undo(journal, fresh)
            used &= ~(1 << j)
        return False

    return spans if search(0) else None


def _span_to_path(shape: TreeShape, mask: int) -> TreePath:
    """Vertex sequence of a path-shaped span, walked from its lowest
    endpoint."""
    degree = {}
    for q in range(shape.n):
        d = (mask & shape.incident[q]).bit_count()
        if d:
            degree[q] = d
    ends = sorted(q for q, d in degree.items() if d == 1)
    walk = [ends[0]]
    prev = -1
    while len(walk) < len(degree):
        cur = walk[-1]
        for w in sorted(shape.graph.neighbors(cur)):
            e = shape.edges.index((cur, w) if cur < w else (w, cur))
            if w != prev and mask >> e & 1:
                walk.append(w)
                prev = cur
                break
    return tuple(walk)


@dataclass(frozen=True)
class ScanResult:
    rep: EptRepresentation | None
    min_h: int | None


_scan_cache: dict[Graph, ScanResult] = {}


def _scan(g: Graph, budget_secs: float | None) -> ScanResult:
    cached = _scan_cache.get(g)
    if cached is not None:
        return cached
    if budget_secs is None:
        budget_secs = default_budget_secs()
    deadline = _Deadline(budget_secs)
    cliques = enumerate_maximal_cliques(g)
    m = len(cliques)
    if m == 0:
        result = ScanResult(EptRepresentation(HostTree(1, ()), ()), 2)
        _scan_cache[g] = result
        return result
    order = _clique_order(cliques)
    adj_self = [
        (1 << v) | sum(1 << w for w in g.neighbors(v)) for v in range(g.n)
    ]
    result = ScanResult(None, None)
    for shape in tree_shapes(m):
        spans = _assign_cliques(shape, cliques, order, adj_self, deadline)
        if spans is not None:
            tree = HostTree(shape.n, shape.edges)
            paths = tuple(_span_to_path(shape, mask) for mask in spans)
            result = ScanResult(
                EptRepresentation(tree, paths), max(2, shape.max_degree)
            )
            break
    _scan_cache[g] = result
    return result


def oracle_membership(
    g: Graph,
    degree_bound: int | None = None,
    tree_edge_bound: int = DEFAULT_TREE_EDGE_BOUND,
    budget_secs: float | None = None,
) -> EptRepresentation | None:
    """A verified Helly representation of g with host degree at most
    degree_bound (when given), or None after exhausting all bijection
    trees. Raises BudgetExhaustedError when time runs out first."""
    m = len(enumerate_maximal_cliques(g))
    if m > tree_edge_bound:
        raise BoundExceededError(
            f"oracle limited to {tree_edge_bound} cliques, graph has {m}"
        )
    found = _scan(g, budget_secs)
    if found.rep is None:
        return None
    if degree_bound is not None and found.rep.tree.max_degree() > degree_bound:
        return None
    return found.rep


def oracle_min_h(
    g: Graph,
    tree_edge_bound: int = DEFAULT_TREE_EDGE_BOUND,
    budget_secs: float | None = None,
) -> int | None:
    """Minimum degree bound (at least 2) at which oracle_membership
    succeeds; None when g admits no Helly representation."""
    m = len(enumerate_maximal_cliques(g))
    if m > tree_edge_bound:
        raise BoundExceededError(
            f"oracle limited to {tree_edge_bound} cliques, graph has {m}"
        )
    return _scan(g, budget_secs).min_h


@functools.lru_cache(maxsize=16)
def _corpus_exact(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1),)
    out: dict[bytes, Graph] = {}
    for g in _corpus_exact(n - 1):
        base = list(g.edges)
        for mask in range(1 << (n - 1)):
            edges = base + [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            h = Graph(n, edges)
            form = canonical_form(h)
            if form not in out:
                out[form] = h
    return tuple(g for _, g in sorted(out.items()))


def small_graph_corpus(
    n: int, connected_only: bool = False, limit: int = CORPUS_VERTEX_BOUND
) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices up to isomorphism, in canonical
    order; optionally only the connected ones."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > limit:
        raise BoundExceededError(
            f"corpus limited to {limit} vertices, asked for {n}"
        )
    graphs = _corpus_exact(n)
    if connected_only:
        graphs = tuple(g for g in graphs if is_connected(g))
    return graphs
