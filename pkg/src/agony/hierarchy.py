"""Rank functions and the scores defined on them.

A rank maps each vertex to an integer. Smaller rank means a higher level
in the hierarchy: an edge ``u -> v`` is forward when ``r[u] < r[v]`` and
backward otherwise, including when both ends share a level.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ContractError, InvariantViolation
from .graph import DirectedGraph


Rank = list[int]


def edge_agony(edge: tuple[int, int], ranks: Sequence[int]) -> int:
    u, v = edge
    return max(ranks[u] - ranks[v] + 1, 0)


def edge_slack(edge: tuple[int, int], ranks: Sequence[int]) -> int:
    u, v = edge
    return max(ranks[v] - ranks[u] - 1, 0)


def is_forward(edge: tuple[int, int], ranks: Sequence[int]) -> bool:
    u, v = edge
    return ranks[u] < ranks[v]


def graph_agony(graph: DirectedGraph, ranks: Sequence[int]) -> int:
    if len(ranks) != graph.n:
        raise ContractError(f"rank has {len(ranks)} entries, graph has {graph.n} vertices")
    return sum(max(ranks[u] - ranks[v] + 1, 0) for u, v in graph.edges())


def conforms(ranks: Sequence[int], subgraph, graph: DirectedGraph) -> bool:
    """True if every backward edge under ``ranks`` belongs to ``subgraph``."""
    member = subgraph.member
    return all(
        member[e] or ranks[u] < ranks[v]
        for e, (u, v) in enumerate(graph.edges())
    )


def partition_from_rank(ranks: Sequence[int]) -> list[set[int]]:
    """Group vertices by rank, lowest rank first; empty levels are skipped."""
    levels: dict[int, set[int]] = {}
    for v, r in enumerate(ranks):
        levels.setdefault(r, set()).add(v)
    return [levels[r] for r in sorted(levels)]


def normalize(ranks: Sequence[int]) -> Rank:
    """Shift ranks so the smallest is 0."""
    if not ranks:
        return []
    low = min(ranks)
    return [r - low for r in ranks]


def approximation_ratio_bound(agony: int, eulerian_edges: int) -> Fraction:
    """Upper bound on ``agony / optimum`` certified by an eulerian subgraph.

    Any eulerian subgraph is a lower bound on the optimal agony, so the
    ratio of the current agony to its size bounds the approximation
    factor. A state with nothing to certify (both zero) is exact.
    """
    if agony < eulerian_edges:
        raise InvariantViolation(f"agony {agony} below eulerian lower bound {eulerian_edges}")
    if eulerian_edges == 0:
        if agony == 0:
            return Fraction(1)
        raise ContractError(f"agony {agony} with an empty eulerian subgraph cannot come from a conforming rank")
    return Fraction(agony, eulerian_edges)


def format_ranks(graph: DirectedGraph, ranks: Sequence[int]) -> str:
    """Rank TSV: ``label<TAB>rank`` sorted by rank, then label."""
    rows = sorted(zip(ranks, graph.labels))
    return "".join(f"{label}\t{r}\n" for r, label in rows)


def parse_ranks(lines) -> dict[str, int]:
    out: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'label rank', got {raw.rstrip()!r}")
        out[parts[0]] = int(parts[1])
    return out
