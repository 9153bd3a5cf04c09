"""Exhaustive representation oracle: trees, shapes, membership, corpus."""

import itertools

import pytest

from eptkit.gates import ExtensionStep, GateRecipe, build_gate
from eptkit.graphs import (
    BoundExceededError,
    Graph,
    canonical_form,
    complete_graph,
    cycle_graph,
    enumerate_maximal_cliques,
    is_connected,
    path_graph,
)
from eptkit.oracle import (
    BudgetExhaustedError,
    enumerate_trees,
    oracle_membership,
    oracle_min_h,
    small_graph_corpus,
    tree_shapes,
)
from eptkit.representation import (
    EdgeClique,
    classify_clique,
    is_helly,
    max_host_degree,
    verify,
)

TWO_C5S = Graph(8, [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (5, 6), (6, 7), (1, 7),
])


def test_enumerate_trees_counts():
    # Cayley: (m+1)^(m-1) labeled trees on m+1 vertices
    for m, expected in [(1, 1), (2, 3), (3, 16), (4, 125)]:
        trees = list(enumerate_trees(m))
        assert len(trees) == expected
        assert len({t.edges for t in trees}) == expected
        assert all(t.n == m + 1 for t in trees)


def test_enumerate_trees_degree_filter():
    paths = list(enumerate_trees(3, max_degree=2))
    assert len(paths) == 12
    assert all(t.max_degree() == 2 for t in paths)
    stars = [t for t in enumerate_trees(3) if t.max_degree() == 3]
    assert len(stars) == 4
    with pytest.raises(ValueError):
        list(enumerate_trees(0))
    with pytest.raises(BoundExceededError):
        list(enumerate_trees(10))


def test_tree_shapes_counts():
    # unlabeled trees with m edges (m+1 vertices)
    expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    for m in range(10):
        shapes = tree_shapes(m)
        assert len(shapes) == expected[m]
        forms = {canonical_form(s.graph) for s in shapes}
        assert len(forms) == len(shapes)
        assert all(s.m == m for s in shapes)
    # ordering puts low-degree hosts first
    degrees = [s.max_degree for s in tree_shapes(6)]
    assert degrees == sorted(degrees)
    assert degrees[0] == 2 and degrees[-1] == 6


def span_edges_of(tree, touched):
    """Union of pairwise tree paths between touched vertices, as a set
    of tree edges (test-local, set-based)."""
    adj = {v: set(tree.neighbors(v)) for v in range(tree.n)}

    def path_between(a, b):
        prev = {a: None}
        stack = [a]
        while stack:
            u = stack.pop()
            if u == b:
                break
            for w in adj[u]:
                if w not in prev:
                    prev[w] = u
                    stack.append(w)
        out = set()
        u = b
        while prev[u] is not None:
            p = prev[u]
            out.add((p, u) if p < u else (u, p))
            u = p
        return out

    out = set()
    for a, b in itertools.combinations(sorted(touched), 2):
        out |= path_between(a, b)
    return out


def edge_set_is_path(tree, edges):
    if not edges:
        return True
    touched = {v for e in edges for v in e}
    deg = {v: 0 for v in touched}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if any(d > 2 for d in deg.values()):
        return False
    # connectivity over the chosen edges
    start = next(iter(touched))
    seen = {start}
    stack = [start]
    eset = set(edges)
    while stack:
        u = stack.pop()
        for w in tree.neighbors(u):
            key = (u, w) if u < w else (w, u)
            if key in eset and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == touched


def labeled_min_h(g):
    """Independent membership search: labeled trees and explicit clique
    permutations instead of shape canonicalization and bitmask spans."""
    cliques = enumerate_maximal_cliques(g)
    m = len(cliques)
    if m == 0:
        return 2
    best = None
    for tree in enumerate_trees(m):
        d = tree.max_degree()
        if best is not None and d >= best:
            continue
        for perm in itertools.permutations(range(m)):
            spans = []
            ok = True
            for v in range(g.n):
                touched = set()
                for i, c in enumerate(cliques):
                    if v in c:
                        touched.update(tree.edges[perm[i]])
                span = span_edges_of(tree, touched)
                for i, c in enumerate(cliques):
                    if v in c:
                        a, b = tree.edges[perm[i]]
                        span.add((a, b) if a < b else (b, a))
                if not edge_set_is_path(tree, span):
                    ok = False
                    break
                spans.append(span)
            if not ok:
                continue
            if all(
                not (spans[u] & spans[v])
                for u in range(g.n)
                for v in range(u + 1, g.n)
                if not g.has_edge(u, v)
            ):
                best = max(2, d)
                break
    return best


def test_oracle_matches_labeled_search():
    for n in range(1, 5):
        for g in small_graph_corpus(n, connected_only=True):
            assert oracle_min_h(g) == labeled_min_h(g), g
    picks = [
        g
        for g in small_graph_corpus(5, connected_only=True)
        if len(enumerate_maximal_cliques(g)) <= 4
    ]
    for g in picks:
        assert oracle_min_h(g) == labeled_min_h(g), g
    assert labeled_min_h(cycle_graph(5)) == 5 == oracle_min_h(cycle_graph(5))


def test_membership_known_values():
    for n in range(4, 8):
        assert oracle_min_h(cycle_graph(n)) == n
    assert oracle_min_h(path_graph(5)) == 2
    assert oracle_min_h(Graph(1)) == 2
    assert oracle_min_h(Graph(3)) == 2
    assert oracle_min_h(complete_graph(2)) == 2
    assert oracle_min_h(complete_graph(4)) == 2
    assert oracle_min_h(Graph(4, [(0, 1), (0, 2), (0, 3)])) == 2
    assert oracle_min_h(TWO_C5S) == 5
    gate5 = build_gate(GateRecipe(4, (ExtensionStep(0, 3, 2),)))
    assert oracle_min_h(gate5.graph) == 5


def test_membership_absent():
    s3 = Graph(6, [
        (2, 3), (3, 5), (2, 5), (0, 2), (0, 3), (1, 3), (1, 5), (2, 4), (4, 5),
    ])
    assert oracle_membership(s3) is None
    assert oracle_min_h(s3) is None


def test_membership_degree_bound():
    c5 = cycle_graph(5)
    assert oracle_membership(c5, degree_bound=4) is None
    rep = oracle_membership(c5, degree_bound=5)
    assert rep is not None and max_host_degree(rep) == 5
    # bound below the minimum loses nothing above it
    assert oracle_membership(c5, degree_bound=7) is not None


def test_returned_representation_postconditions():
    for g in (
        cycle_graph(6),
        path_graph(5),
        complete_graph(4),
        TWO_C5S,
        Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    ):
        rep = oracle_membership(g)
        assert rep is not None
        assert verify(rep, g) == (True, None)
        ok, _ = is_helly(rep)
        assert ok
        for c in enumerate_maximal_cliques(g):
            assert isinstance(classify_clique(rep, c), EdgeClique)


def test_oracle_bounds_and_budget():
    k34 = Graph(7, [(a, b) for a in range(3) for b in range(3, 7)])
    with pytest.raises(BoundExceededError, match="12"):
        oracle_membership(k34)
    with pytest.raises(BoundExceededError):
        oracle_min_h(k34)
    # relabeled copy dodges the scan cache, so the deadline actually runs
    perm = [7, 6, 5, 4, 3, 2, 1, 0]
    shuffled = Graph(8, [(perm[u], perm[v]) for u, v in TWO_C5S.edges])
    with pytest.raises(BudgetExhaustedError):
        oracle_membership(shuffled, budget_secs=1e-9)


def test_corpus_counts():
    for n, total, conn in [
        (1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6),
        (5, 34, 21), (6, 156, 112), (7, 1044, 853),
    ]:
        allg = small_graph_corpus(n)
        assert len(allg) == total
        assert len({canonical_form(g) for g in allg}) == total
        connected = small_graph_corpus(n, connected_only=True)
        assert len(connected) == conn
        assert all(is_connected(g) for g in connected)
    assert small_graph_corpus(0) == ()
    with pytest.raises(BoundExceededError):
        small_graph_corpus(8)
    with pytest.raises(ValueError):
        small_graph_corpus(-1)
