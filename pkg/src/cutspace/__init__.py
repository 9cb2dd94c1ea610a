"""Minimum cut bases and relevant cuts of weighted undirected graphs."""
from .enumeration import (
    METHODS,
    RelevantCutSet,
    WeightMatrix,
    dedup_union,
    ordered_cut_enumeration,
    relevant_cuts,
    relevant_gus_p,
    relevant_gus_t,
    relevant_yeh,
)
from .errors import (
    Collapse,
    CutSpaceError,
    DisconnectedGraph,
    EmptySide,
    FullSide,
    GraphError,
    MethodDisagreement,
    MixedGraph,
    Overlap,
    ParseError,
    SameVertex,
    TooLarge,
)
from .fileio import format_graph, parse_graph, read_graph, write_graph
from .flow import FlowResult, ResidualGraph, max_flow, min_cut_side
from .gomory_hu import GomoryHuTree, basis_from_tree, build_gomory_hu, min_cut_weight, path_min_edges
from .graph import Cut, CutFamily, Graph, cut_from_side, is_bond, is_independent_with, rank, xor
from .pqdag import PQDag, build_pqdag, contract, enumerate_closed_sets

__version__ = "0.1.0"
