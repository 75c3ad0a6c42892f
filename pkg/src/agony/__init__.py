"""Hierarchy discovery in directed graphs by exact agony minimization."""

from .baseline import find_negative_cycle, gupte_min_agony, max_eulerian_cycle_canceling, ResidualGraph
from .errors import ContractError, EdgeListParseError, InvariantViolation
from .eulerian import EulerianSubgraph, cycle_dfs, initial_rank, is_eulerian, is_maximal_eulerian
from .graph import DirectedGraph, load_edge_list, loads_edge_list, read_edge_list, remainder_graph
from .hierarchy import (
    approximation_ratio_bound,
    conforms,
    edge_agony,
    edge_slack,
    graph_agony,
    is_forward,
    partition_from_rank,
)
from .oracle import brute_max_eulerian, brute_min_agony
from .pipeline import solve
from .solver import AgonyResult, AgonySolver, IterationTrace, min_agony, relief

__all__ = [
    "AgonyResult", "AgonySolver", "ContractError", "DirectedGraph", "EdgeListParseError",
    "EulerianSubgraph", "InvariantViolation", "IterationTrace", "ResidualGraph",
    "approximation_ratio_bound", "brute_max_eulerian", "brute_min_agony", "conforms",
    "cycle_dfs", "edge_agony", "edge_slack", "find_negative_cycle", "graph_agony",
    "gupte_min_agony", "initial_rank", "is_eulerian", "is_forward", "is_maximal_eulerian",
    "load_edge_list", "loads_edge_list", "max_eulerian_cycle_canceling", "min_agony",
    "partition_from_rank", "read_edge_list", "relief", "remainder_graph", "solve",
]
