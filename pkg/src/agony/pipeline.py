"""End-to-end solve: maximal eulerian subgraph, layered rank, relief loop."""

from __future__ import annotations

from fractions import Fraction

from .baseline import gupte_min_agony
from .eulerian import cycle_dfs, initial_rank
from .graph import DirectedGraph
from .solver import AgonyResult, min_agony

ALGORITHMS = ("relief", "gupte")


def solve(
    graph: DirectedGraph,
    algorithm: str = "relief",
    epsilon: Fraction | float | int = 0,
    speedup: bool = True,
    check: bool = False,
) -> AgonyResult:
    if algorithm == "relief":
        sub = cycle_dfs(graph)
        return min_agony(graph, sub, initial_rank(graph, sub), epsilon=epsilon, speedup=speedup, check=check)
    if algorithm == "gupte":
        # always exact; epsilon and speedup do not apply
        return gupte_min_agony(graph, check=check)
    raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
