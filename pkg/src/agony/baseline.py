"""Cycle-canceling reference solver.

Grows an eulerian subgraph to maximum size by repeatedly finding a
negative cycle in a residual graph with Bellman-Ford, then drains the
slack of a conforming rank. Much slower than the relief loop; it exists
to cross-check it.

Residual arcs, one per edge ``(u, v)``:

* edge outside ``F``: arc ``u -> v`` with weight -1 (adding it grows ``F``)
* edge inside ``F``: arc ``v -> u`` with weight +1 (removing it shrinks ``F``)

Every vertex of a residual cycle keeps its in/out balance when the
cycle's edges are toggled, and ``|F|`` changes by minus the cycle weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation
from .eulerian import EulerianSubgraph, cycle_dfs, initial_rank
from .graph import DirectedGraph
from .solver import AgonyResult, AgonySolver


@dataclass(frozen=True)
class ResidualGraph:
    n: int
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    weights: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @classmethod
    def build(cls, graph: DirectedGraph, subgraph: EulerianSubgraph) -> "ResidualGraph":
        tails, heads, weights = [], [], []
        member = subgraph.member
        for e, (u, v) in enumerate(graph.edges()):
            if member[e]:
                tails.append(v)
                heads.append(u)
                weights.append(1)
            else:
                tails.append(u)
                heads.append(v)
                weights.append(-1)
        return cls(graph.n, tuple(tails), tuple(heads), tuple(weights), tuple(range(graph.m)))

    def adds(self, arc: int) -> bool:
        return self.weights[arc] < 0


def _cycle_in_predecessors(n: int, pred_arc: list[int], tails: tuple[int, ...]) -> Optional[list[int]]:
    # walk predecessor pointers; every vertex has at most one, so a walk
    # either dies out or runs into a cycle
    state = [0] * n  # 0 unseen, 1 on current walk, 2 finished
    for start in range(n):
        if state[start]:
            continue
        walk = []
        x = start
        while x >= 0 and not state[x]:
            state[x] = 1
            walk.append(x)
            a = pred_arc[x]
            x = tails[a] if a >= 0 else -1
        if x >= 0 and state[x] == 1:
            cycle = []
            y = x
            while True:
                a = pred_arc[y]
                cycle.append(a)
                y = tails[a]
                if y == x:
                    break
            cycle.reverse()
            return cycle
        for y in walk:
            state[y] = 2
    return None


def find_negative_cycle(residual: ResidualGraph) -> Optional[list[int]]:
    """Arc indices of a simple negative-weight cycle, or ``None``.

    Bellman-Ford from a virtual source joined to every vertex at weight
    zero. After each full relaxation pass the predecessor graph is
    checked for a cycle, which is then necessarily negative.
    """
    n = residual.n
    tails, heads, weights = residual.tails, residual.heads, residual.weights
    dist = [0] * n
    pred_arc = [-1] * n
    for _ in range(n + 1):
        changed = False
        for a in range(len(tails)):
            nd = dist[tails[a]] + weights[a]
            h = heads[a]
            if nd < dist[h]:
                dist[h] = nd
                pred_arc[h] = a
                changed = True
        if not changed:
            return None
        cycle = _cycle_in_predecessors(n, pred_arc, tails)
        if cycle is not None:
            if sum(weights[a] for a in cycle) >= 0:
                raise InvariantViolation("predecessor cycle is not negative")
            return cycle
    raise InvariantViolation("Bellman-Ford kept relaxing without exposing a cycle")


def max_eulerian_cycle_canceling(graph: DirectedGraph, start: EulerianSubgraph | None = None) -> EulerianSubgraph:
    """Maximum eulerian subgraph by canceling negative residual cycles."""
    sub = cycle_dfs(graph) if start is None else start.copy()
    for _ in range(graph.m + 1):
        residual = ResidualGraph.build(graph, sub)
        cycle = find_negative_cycle(residual)
        if cycle is None:
            return sub
        before = sub.size
        weight = 0
        for a in cycle:
            sub.toggle(residual.edge_ids[a])
            weight += residual.weights[a]
        if sub.size != before - weight or not sub.is_balanced():
            raise InvariantViolation("cycle cancellation broke the subgraph")
    raise InvariantViolation("more cancellations than edges")


def gupte_min_agony(graph: DirectedGraph, check: bool = False) -> AgonyResult:
    """Optimal rank via a maximum eulerian subgraph found by cycle canceling.

    With ``F`` already maximum, the relief loop can only ever take the
    rank-raising branch; an augmentation would contradict maximality.
    """
    sub = max_eulerian_cycle_canceling(graph)
    solver = AgonySolver(graph, sub, initial_rank(graph, sub), speedup=True, check=check)

    def no_augment(_solver, outcome):
        if outcome.case != 1:
            raise InvariantViolation("augmenting path found after cycle canceling")

    return solver.run(callback=no_augment)
