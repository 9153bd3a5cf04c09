"""Command-line front end.

Subcommands: recognize, cheapest, atoms, gen-gate, catalog, oracle,
verify-rep, corpus. Outputs are plain line-oriented text (DOT where
offered is additive). Exit codes: 0 success or member, 1 non-member or
failed check, 2 input error, 3 bound or budget exceeded.

Disconnected inputs to recognize/cheapest are handled per connected
component with the maximum degree reported; the library pipeline
itself requires connected graphs, so this is flagged on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import decomposition, gates, oracle, recognition, representation
from .graphs import (
    BoundExceededError,
    Graph,
    GraphParseError,
    connected_components,
    graph_to_dot,
    graph_to_text,
    induced_subgraph,
    is_connected,
    parse_graph,
)
from .oracle import BudgetExhaustedError
from .representation import representation_to_text

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _emit(payload: str, output: str | None) -> None:
    if output:
        Path(output).write_text(payload)
    else:
        sys.stdout.write(payload)


def _component_results(g: Graph, budget: float | None):
    if is_connected(g):
        return [recognition.cheapest_representation(g, budget_secs=budget)]
    print(
        "warning: disconnected input, reporting the maximum over components",
        file=sys.stderr,
    )
    results = []
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        results.append(recognition.cheapest_representation(sub, budget_secs=budget))
    return results


def _cmd_recognize(args) -> int:
    g = _read_graph(args.file)
    results = _component_results(g, args.budget_secs)
    if not all(r.helly_ept for r in results):
        print("not-helly-ept")
        return EXIT_NO
    h = max(r.h for r in results)
    if args.output and len(results) == 1 and results[0].certificate:
        Path(args.output).write_text(
            representation_to_text(results[0].certificate)
        )
    if args.h is not None:
        if h <= args.h:
            print("member")
            return EXIT_OK
        print("not-member")
        return EXIT_NO
    print(f"helly-ept h={h}")
    return EXIT_OK


def _cmd_cheapest(args) -> int:
    g = _read_graph(args.file)
    results = _component_results(g, args.budget_secs)
    if not all(r.helly_ept for r in results):
        print("not-helly-ept")
        return EXIT_NO
    h = max(r.h for r in results)
    if args.output and len(results) == 1 and results[0].certificate:
        Path(args.output).write_text(
            representation_to_text(results[0].certificate)
        )
    print(f"helly-ept h={h}")
    return EXIT_OK


def _cmd_atoms(args) -> int:
    g = _read_graph(args.file)
    tree = decomposition.decomposition_tree(g)
    if args.format == "dot":
        _emit(decomposition.tree_to_dot(tree), args.output)
        return EXIT_OK
    blocks = [decomposition.tree_to_text(tree)]
    for i, (atom, mapping) in enumerate(decomposition.atoms(g)):
        header = f"atom {i}: vertices " + " ".join(str(v) for v in mapping)
        blocks.append(graph_to_text(atom, comments=(header,)))
    _emit("\n".join(blocks), args.output)
    return EXIT_OK


def _parse_extend(spec: str) -> gates.ExtensionStep:
    parts = spec.split(",")
    if len(parts) != 3:
        raise GraphParseError(f"bad extension {spec!r}, want A,B,L", line=1)
    try:
        a, b, length = (int(p) for p in parts)
    except ValueError:
        raise GraphParseError(f"bad extension {spec!r}, want A,B,L", line=1) from None
    return gates.ExtensionStep(a, b, length)


def _gate_comments(recipe: gates.GateRecipe, cliques) -> list[str]:
    lines = [f"gate: base cycle {recipe.base}"]
    lines.extend(
        f"extend: cliques {s.clique_a},{s.clique_b} path {s.path_len}"
        for s in recipe.steps
    )
    lines.append(
        "cliques: " + "; ".join(" ".join(map(str, c)) for c in cliques)
    )
    return lines


def _cmd_gen_gate(args) -> int:
    steps = tuple(_parse_extend(s) for s in args.extend)
    gate = gates.build_gate(gates.GateRecipe(args.base, steps))
    if args.format == "dot":
        _emit(graph_to_dot(gate.graph), args.output)
        return EXIT_OK
    _emit(
        graph_to_text(gate.graph, comments=_gate_comments(gate.recipe, gate.cliques)),
        args.output,
    )
    return EXIT_OK


def _cmd_catalog(args) -> int:
    catalog = gates.enumerate_gates(args.max)
    out_dir = Path(args.output) if args.output else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i, recipe in enumerate(catalog.values()):
        gate = gates.build_gate(recipe)
        steps = " ".join(
            f"{s.clique_a},{s.clique_b},{s.path_len}" for s in recipe.steps
        )
        suffix = f" extend {steps}" if steps else ""
        print(
            f"gate {i}: n={gate.graph.n} k={recipe.clique_count()}"
            f" base {recipe.base}{suffix}"
        )
        if out_dir:
            path = out_dir / f"gate_{i:03d}.txt"
            path.write_text(
                graph_to_text(gate.graph, comments=_gate_comments(recipe, gate.cliques))
            )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    try:
        rep = oracle.oracle_membership(
            g, degree_bound=args.max_degree, budget_secs=args.budget_secs
        )
    except BudgetExhaustedError:
        print("budget-exhausted")
        return EXIT_BOUND
    if rep is None:
        print("none")
        return EXIT_NO
    _emit(representation_to_text(rep), args.output)
    return EXIT_OK


def _cmd_verify_rep(args) -> int:
    g = _read_graph(args.graph)
    text = sys.stdin.read() if args.rep == "-" else Path(args.rep).read_text()
    rep = representation.parse_representation(text)
    ok, why = representation.verify(rep, g)
    if not ok:
        print(f"mismatch: {why}")
        return EXIT_NO
    helly, _ = representation.is_helly(rep)
    degree = representation.max_host_degree(rep)
    print(f"ok helly={'true' if helly else 'false'} degree={degree}")
    from .graphs import enumerate_maximal_cliques

    for c in enumerate_maximal_cliques(g):
        witness = representation.classify_clique(rep, c)
        members = " ".join(str(v) for v in c)
        if isinstance(witness, representation.EdgeClique):
            a, b = witness.edge
            print(f"clique {members}: edge-clique ({a},{b})")
        else:
            ends = ",".join(str(q) for q in witness.ends)
            print(f"clique {members}: claw-clique center {witness.center} ends {ends}")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    blocks = [
        graph_to_text(g)
        for g in oracle.small_graph_corpus(args.n, connected_only=args.connected)
    ]
    _emit("\n".join(blocks), args.output)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eptkit",
        description="Recognition and cheapest host-degree tools for Helly "
        "edge-intersection graphs of tree paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget-secs", type=float, default=None,
                       help="wall-clock search budget (default from EPTKIT_BUDGET_SECS or 60)")

    p = sub.add_parser("recognize", help="decide Helly [h,2,2] membership")
    p.add_argument("file", help="graph file, - for stdin")
    p.add_argument("--h", type=int, default=None, help="degree bound to test")
    p.add_argument("--output", default=None, help="write certificate here")
    add_budget(p)
    p.set_defaults(run=_cmd_recognize)

    p = sub.add_parser("cheapest", help="minimum h with the graph in Helly [h,2,2]")
    p.add_argument("file")
    p.add_argument("--output", default=None, help="write certificate here")
    add_budget(p)
    p.set_defaults(run=_cmd_cheapest)

    p = sub.add_parser("atoms", help="clique-separator decomposition")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(run=_cmd_atoms)

    p = sub.add_parser("gen-gate", help="build a gate from its recipe")
    p.add_argument("--base", type=int, required=True, help="base cycle length")
    p.add_argument("--extend", action="append", default=[], metavar="A,B,L",
                   help="extension step: clique ids A,B and path length L")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(run=_cmd_gen_gate)

    p = sub.add_parser("catalog", help="all gates up to a vertex bound")
    p.add_argument("--max", type=int, default=gates.CATALOG_VERTEX_BOUND)
    p.add_argument("--output", default=None, help="directory for one file per gate")
    p.set_defaults(run=_cmd_catalog)

    p = sub.add_parser("oracle", help="exhaustive Helly representation search")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--output", default=None)
    add_budget(p)
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("verify-rep", help="check a representation against a graph")
    p.add_argument("graph")
    p.add_argument("rep")
    p.set_defaults(run=_cmd_verify_rep)

    p = sub.add_parser("corpus", help="all graphs with n vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--output", default=None)
    p.set_defaults(run=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except BudgetExhaustedError:
        print("budget-exhausted")
        return EXIT_BOUND
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (GraphParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
