"""Eulerian subgraphs: storage, single-pass DFS discovery, initial ranks."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ContractError
from .graph import DirectedGraph


class EulerianSubgraph:
    """Edge-membership set over a graph's edge indices.

    Degree counters are kept per vertex so balance can be checked in
    O(n). Nothing stops a caller from building an unbalanced set; use
    :meth:`is_balanced` to check.
    """

    __slots__ = ("graph", "member", "in_deg", "out_deg", "size")

    def __init__(self, graph: DirectedGraph, edges: Iterable[int] = ()):
        self.graph = graph
        self.member = bytearray(graph.m)
        self.in_deg = [0] * graph.n
        self.out_deg = [0] * graph.n
        self.size = 0
        for e in edges:
            self.add(e)

    def add(self, e: int) -> None:
        if self.member[e]:
            raise ContractError(f"edge {e} already in subgraph")
        self.member[e] = 1
        self.out_deg[self.graph.sources[e]] += 1
        self.in_deg[self.graph.targets[e]] += 1
        self.size += 1

    def remove(self, e: int) -> None:
        if not self.member[e]:
            raise ContractError(f"edge {e} not in subgraph")
        self.member[e] = 0
        self.out_deg[self.graph.sources[e]] -= 1
        self.in_deg[self.graph.targets[e]] -= 1
        self.size -= 1

    def toggle(self, e: int) -> None:
        if self.member[e]:
            self.remove(e)
        else:
            self.add(e)

    def __contains__(self, e: int) -> bool:
        return bool(self.member[e])

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return (e for e, flag in enumerate(self.member) if flag)

    def is_balanced(self) -> bool:
        return self.in_deg == self.out_deg

    def copy(self) -> "EulerianSubgraph":
        other = EulerianSubgraph.__new__(EulerianSubgraph)
        other.graph = self.graph
        other.member = bytearray(self.member)
        other.in_deg = list(self.in_deg)
        other.out_deg = list(self.out_deg)
        other.size = self.size
        return other

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [self.graph.edge(e) for e in self]

    def __repr__(self) -> str:
        return f"EulerianSubgraph(size={self.size}, edges={list(self)})"


def cycle_dfs(graph: DirectedGraph, stats: dict | None = None) -> EulerianSubgraph:
    """Find a maximal eulerian subgraph with one depth-first sweep.

    Whenever the DFS path closes on itself, the cycle's edges join the
    subgraph and are deleted, and the path is popped back to the vertex
    where the cycle starts. A vertex with no live out-edges left is
    removed. Every edge is deleted or passed over at most once, so the
    sweep is linear in the size of the graph.

    If ``stats`` is given, the number of vertex pushes is stored under
    ``"pushes"``; it never exceeds ``n + m``.
    """
    n = graph.n
    offsets, heads, edge_at = graph.csr_offsets, graph.csr_targets, graph.csr_edges
    found = EulerianSubgraph(graph)
    member, in_deg, out_deg = found.member, found.in_deg, found.out_deg
    # flags and cursors index CSR positions so scans stay sequential in memory
    used = bytearray(graph.m)
    dead = bytearray(n)
    cursor = list(offsets[:-1])
    # position of a vertex on the current path, -1 when off the path
    where = [-1] * n
    pushes = 0

    for start in range(n):
        if dead[start]:
            continue
        path = [start]
        via: list[int] = [-1]  # CSR position of the edge reaching path[i]
        where[start] = 0
        pushes += 1
        while path:
            u = path[-1]
            i, end = cursor[u], offsets[u + 1]
            while i < end and (used[i] or dead[heads[i]]):
                i += 1
            cursor[u] = i
            if i == end:
                path.pop()
                via.pop()
                where[u] = -1
                dead[u] = 1
                continue
            v = heads[i]
            k = where[v]
            if k >= 0:
                # close the cycle path[k] -> ... -> u -> v == path[k]
                used[i] = 1
                member[edge_at[i]] = 1
                out_deg[u] += 1
                in_deg[v] += 1
                for j in range(k + 1, len(path)):
                    w = path[j]
                    used[via[j]] = 1
                    member[edge_at[via[j]]] = 1
                    out_deg[path[j - 1]] += 1
                    in_deg[w] += 1
                    where[w] = -1
                found.size += len(path) - k
                del path[k + 1:]
                del via[k + 1:]
            else:
                where[v] = len(path)
                path.append(v)
                via.append(i)
                pushes += 1
    if stats is not None:
        stats["pushes"] = pushes
    return found


def topological_layers(graph: DirectedGraph, skip: bytearray | None = None) -> list[int] | None:
    """Layer vertices by repeatedly removing all sources at once.

    Edges flagged in ``skip`` are ignored. Returns the layer of each
    vertex, or ``None`` if the remaining edges contain a cycle.
    """
    n, sources, targets = graph.n, graph.sources, graph.targets
    indeg = [0] * n
    for e in range(graph.m):
        if skip is None or not skip[e]:
            indeg[targets[e]] += 1
    layer = [0] * n
    frontier = [v for v in range(n) if indeg[v] == 0]
    seen = len(frontier)
    depth = 0
    out_edges = graph.out_edges
    while frontier:
        nxt = []
        for u in frontier:
            layer[u] = depth
            for e in out_edges[u]:
                if skip is not None and skip[e]:
                    continue
                v = targets[e]
                indeg[v] -= 1
                if indeg[v] == 0:
                    nxt.append(v)
        seen += len(nxt)
        frontier = nxt
        depth += 1
    if seen != n:
        return None
    return layer


def initial_rank(graph: DirectedGraph, subgraph: EulerianSubgraph) -> list[int]:
    """Rank conforming to a maximal eulerian subgraph.

    The edges outside the subgraph form a DAG; peeling its sources layer
    by layer makes each of those edges strictly forward.
    """
    layers = topological_layers(graph, skip=subgraph.member)
    if layers is None:
        raise ContractError("edges outside the subgraph contain a cycle; subgraph is not maximal")
    return layers


def is_eulerian(graph: DirectedGraph, edges: Iterable[int]) -> bool:
    bal = [0] * graph.n
    for e in edges:
        bal[graph.sources[e]] += 1
        bal[graph.targets[e]] -= 1
    return not any(bal)


def is_maximal_eulerian(graph: DirectedGraph, subgraph: EulerianSubgraph) -> bool:
    if not is_eulerian(graph, subgraph):
        return False
    return topological_layers(graph, skip=subgraph.member) is not None
