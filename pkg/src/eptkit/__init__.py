"""Recognition and cheapest-representation toolkit for Helly
edge-intersection graphs of paths in bounded-degree trees."""

from .decomposition import (
    AtomLeaf,
    CliqueDecomposition,
    SeparatorNode,
    atoms,
    decomposition_tree,
    find_clique_separator,
)
from .gates import (
    ExtensionStep,
    GateRecipe,
    LabeledGate,
    build_gate,
    check_two_clique_property,
    contains_gate_ge,
    enumerate_gates,
    is_gate,
    rewire_gate,
)
from .graphs import (
    BoundExceededError,
    Graph,
    GraphParseError,
    canonical_form,
    canonical_labeling,
    complete_graph,
    connected_components,
    cycle_graph,
    enumerate_maximal_cliques,
    find_chordless_cycle_ge,
    graph_to_dot,
    graph_to_text,
    induced_subgraph,
    is_connected,
    isomorphism,
    parse_graph,
    path_graph,
)
from .oracle import (
    BudgetExhaustedError,
    enumerate_trees,
    oracle_membership,
    oracle_min_h,
    small_graph_corpus,
    tree_shapes,
)
from .recognition import (
    RecognitionResult,
    characterization_crosscheck,
    cheapest_representation,
    has_asteroidal_triple,
    helly_h_membership,
    is_chordal,
    is_helly_ept,
    is_interval,
)
from .representation import (
    ClawClique,
    EdgeClique,
    EptRepresentation,
    HostTree,
    MultipieWitness,
    PieWitness,
    classify_clique,
    clique_of_claw,
    clique_of_edge,
    edge_intersection_graph,
    find_claw_violation,
    find_multipie,
    find_pie,
    is_helly,
    max_host_degree,
    parse_representation,
    representation_to_dot,
    representation_to_text,
    star_representation,
    verify,
)

__all__ = [
    "AtomLeaf",
    "BoundExceededError",
    "BudgetExhaustedError",
    "ClawClique",
    "CliqueDecomposition",
    "EdgeClique",
    "EptRepresentation",
    "ExtensionStep",
    "GateRecipe",
    "Graph",
    "GraphParseError",
    "HostTree",
    "LabeledGate",
    "MultipieWitness",
    "PieWitness",
    "RecognitionResult",
    "SeparatorNode",
    "atoms",
    "build_gate",
    "canonical_form",
    "canonical_labeling",
    "characterization_crosscheck",
    "cheapest_representation",
    "check_two_clique_property",
    "classify_clique",
    "clique_of_claw",
    "clique_of_edge",
    "complete_graph",
    "connected_components",
    "contains_gate_ge",
    "cycle_graph",
    "decomposition_tree",
    "edge_intersection_graph",
    "enumerate_gates",
    "enumerate_maximal_cliques",
    "enumerate_trees",
    "find_chordless_cycle_ge",
    "find_claw_violation",
    "find_clique_separator",
    "find_multipie",
    "find_pie",
    "graph_to_dot",
    "graph_to_text",
    "has_asteroidal_triple",
    "helly_h_membership",
    "induced_subgraph",
    "is_chordal",
    "is_connected",
    "is_gate",
    "is_helly",
    "is_helly_ept",
    "is_interval",
    "isomorphism",
    "max_host_degree",
    "oracle_membership",
    "oracle_min_h",
    "parse_graph",
    "parse_representation",
    "path_graph",
    "representation_to_dot",
    "representation_to_text",
    "rewire_gate",
    "small_graph_corpus",
    "star_representation",
    "tree_shapes",
    "verify",
]
