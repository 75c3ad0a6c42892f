"""Primal-dual agony minimization.

The solver keeps a maximal eulerian subgraph ``F`` together with a rank
that conforms to it (every backward edge lies in ``F``). For such a pair
the agony equals ``|F|`` plus the total slack of the edges in ``F``, so
the pair is optimal exactly when no edge of ``F`` has slack. Each
:meth:`AgonySolver.relieve` call removes one slack edge, either by
raising ranks (case 1) or by rerouting ``F`` along an augmenting path
that makes it strictly larger (case 2).
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heappop, heappush
from typing import Callable, NamedTuple, Optional

from .errors import ContractError, InvariantViolation
from .eulerian import EulerianSubgraph
from .graph import DirectedGraph
from .hierarchy import conforms, graph_agony, normalize

log = logging.getLogger(__name__)

TRACE_HEADER = ("iteration", "agony", "eulerian_edges", "case", "relieved")


class TraceRow(NamedTuple):
    iteration: int
    agony: int
    eulerian_edges: int
    case: int
    relieved: int


@dataclass
class IterationTrace:
    """Scores after every relief call; row 0 is the starting state (case 0)."""

    rows: list[TraceRow] = field(default_factory=list)

    def append(self, *values: int) -> None:
        self.rows.append(TraceRow(*values))

    def __len__(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TRACE_HEADER)
        writer.writerows(self.rows)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "IterationTrace":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if tuple(header) != TRACE_HEADER:
            raise ValueError(f"unexpected trace header {header}")
        return cls([TraceRow(*map(int, row)) for row in reader if row])


class ReliefOutcome(NamedTuple):
    case: int
    edge: int
    relieved: int
    added: tuple[int, ...]
    removed: tuple[int, ...]
    visited: int


@dataclass
class AgonyResult:
    ranks: list[int]
    subgraph: EulerianSubgraph
    agony: int
    eulerian_edges: int
    iterations: int
    trace: IterationTrace
    augmentations: int = 0

    @property
    def exact(self) -> bool:
        return self.agony == self.eulerian_edges

    @property
    def ratio(self) -> Fraction:
        from .hierarchy import approximation_ratio_bound

        return approximation_ratio_bound(self.agony, self.eulerian_edges)


class AgonySolver:
    """Mutable solver state over one graph.

    The inputs are copied; ``subgraph`` must be maximal eulerian and
    ``ranks`` must conform to it. With ``check`` set, every step is
    followed by a from-scratch audit of the bookkeeping.
    """

    def __init__(
        self,
        graph: DirectedGraph,
        subgraph: EulerianSubgraph,
        ranks: list[int],
        speedup: bool = True,
        check: bool = False,
    ):
        if len(ranks) != graph.n:
            raise ContractError(f"rank has {len(ranks)} entries, graph has {graph.n} vertices")
        if subgraph.graph is not graph and len(subgraph.member) != graph.m:
            raise ContractError("subgraph belongs to a different graph")
        self.graph = graph
        self.subgraph = subgraph.copy()
        self.ranks = list(ranks)
        self.speedup = speedup
        self.check = check
        # (vertex, priority) per pop when set to a list; test instrumentation
        self.pop_log: list[tuple[int, int]] | None = None
        if check:
            self._check_input()

        n, m = graph.n, graph.m
        member = self.subgraph.member
        # adjacency split by membership; only these lists are scanned
        self._rem_out = [[e for e in out if not member[e]] for out in graph.out_edges]
        self._f_out = [[e for e in out if member[e]] for out in graph.out_edges]
        self._f_in = [[e for e in inc if member[e]] for inc in graph.in_edges]
        self._t = [0] * n
        self._parent = [-1] * n
        self._popped = bytearray(n)

        # slack registry: current slack per F-edge, lazy max-heaps keyed by slack
        self.slack = [0] * m
        self.total_slack = 0
        self.positive = 0
        r, src, dst = self.ranks, graph.sources, graph.targets
        top = 0
        for e in range(m):
            if member[e]:
                s = r[dst[e]] - r[src[e]] - 1
                if s > 0:
                    self.slack[e] = s
                    self.total_slack += s
                    self.positive += 1
                    top = max(top, s)
        self._buckets: list[list[int]] = [[] for _ in range(top + 1)]
        for e in range(m):
            if self.slack[e]:
                self._buckets[self.slack[e]].append(e)
        for b in self._buckets:
            b.sort()
        self.max_slack = top

    @property
    def eulerian_edges(self) -> int:
        return self.subgraph.size

    @property
    def agony(self) -> int:
        # gap decomposition; valid because the rank conforms to a maximal F
        return self.subgraph.size + self.total_slack

    def _check_input(self) -> None:
        from .eulerian import is_maximal_eulerian

        if not is_maximal_eulerian(self.graph, self.subgraph):
            raise ContractError("subgraph is not a maximal eulerian subgraph")
        if not conforms(self.ranks, self.subgraph, self.graph):
            raise ContractError("rank does not conform to the subgraph")

    def select_max_slack_edge(self) -> Optional[int]:
        """Edge of ``F`` with the largest slack, lowest index on ties."""
        k = self.max_slack
        buckets, slack, member = self._buckets, self.slack, self.subgraph.member
        while k > 0:
            heap = buckets[k]
            while heap:
                e = heap[0]
                if member[e] and slack[e] == k:
                    self.max_slack = k
                    return e
                heappop(heap)
            k -= 1
        self.max_slack = 0
        return None

    def _set_slack(self, e: int, new: int) -> None:
        old = self.slack[e]
        if new == old:
            return
        if new > old:
            raise InvariantViolation(f"slack of edge {e} grew from {old} to {new}")
        self.total_slack += new - old
        if old > 0 and new == 0:
            self.positive -= 1
        self.slack[e] = new
        if new > 0:
            heappush(self._buckets[new], e)

    def _drop_from_registry(self, e: int) -> None:
        old = self.slack[e]
        if old:
            self.total_slack -= old
            self.positive -= 1
            self.slack[e] = 0

    def relieve(self, edge: int) -> ReliefOutcome:
        """Remove the slack of ``edge`` (which must be in ``F``).

        Vertices are raised in order of their pending increase, largest
        first, using an array of buckets indexed by the increase. Raising
        ``u`` may turn a remainder edge ``u -> v`` backward (so ``v`` must
        rise) or widen the slack of an ``F`` edge ``w -> u`` (so ``w``
        must rise). If the head of ``edge`` is itself forced up, the
        parent links give an augmenting path and ``F`` grows instead.
        """
        g = self.graph
        src, dst = g.sources, g.targets
        rem_out, f_in, f_out = self._rem_out, self._f_in, self._f_out
        member = self.subgraph.member
        r, t, parent, popped = self.ranks, self._t, self._parent, self._popped
        p, s = src[edge], dst[edge]
        if not member[edge]:
            raise ContractError(f"edge {edge} is not in the eulerian subgraph")
        relieved = r[s] - r[p] - 1
        if relieved <= 0:
            raise ContractError(f"edge {edge} has no slack")

        buckets: list[list[int]] = [[] for _ in range(relieved + 1)]
        t[p] = relieved
        buckets[relieved].append(p)
        touched = [p]
        visited: list[int] = []
        cur = relieved
        speedup = self.speedup
        pop_log = self.pop_log

        while True:
            limit = t[s] if speedup else 0
            while cur > limit and not buckets[cur]:
                cur -= 1
            if cur <= limit:
                break
            u = buckets[cur].pop()
            if popped[u] or t[u] != cur:
                continue
            popped[u] = 1
            visited.append(u)
            if pop_log is not None:
                pop_log.append((u, cur))
            ru = r[u] + cur
            r[u] = ru
            for f in rem_out[u]:
                v = dst[f]
                need = ru + 1 - r[v]
                if need > t[v]:
                    if popped[v] or need > cur:
                        raise InvariantViolation(f"relief revisits vertex {v} (need {need}, at {cur})")
                    if not t[v]:
                        touched.append(v)
                    t[v] = need
                    parent[v] = f
                    buckets[need].append(v)
            for f in f_in[u]:
                w = src[f]
                rw = r[w]
                grown = ru - rw - 1
                if grown <= 0:
                    continue
                before = ru - cur - (rw - t[w] if popped[w] else rw) - 1
                need = grown - before if before > 0 else grown
                if need > t[w]:
                    if popped[w] or need > cur:
                        raise InvariantViolation(f"relief revisits vertex {w} (need {need}, at {cur})")
                    if not t[w]:
                        touched.append(w)
                    t[w] = need
                    parent[w] = f
                    buckets[need].append(w)

        back = t[s]
        if speedup and back:
            for u in visited:
                r[u] -= back

        added: list[int] = []
        removed: list[int] = []
        if back:
            x = s
            while x != p:
                f = parent[x]
                if member[f]:
                    removed.append(f)
                    x = dst[f]
                else:
                    added.append(f)
                    x = src[f]
            removed.append(edge)
            for f in removed:
                self._drop_from_registry(f)
                self.subgraph.remove(f)
                u, v = src[f], dst[f]
                f_out[u].remove(f)
                f_in[v].remove(f)
                rem_out[u].append(f)
            for f in added:
                self.subgraph.add(f)
                u, v = src[f], dst[f]
                rem_out[u].remove(f)
                f_out[u].append(f)
                f_in[v].append(f)

        slack = self.slack
        shift = back if speedup else 0
        for u in visited:
            if t[u] == shift:
                continue  # net rank unchanged
            ru = r[u]
            for f in f_in[u]:
                new = ru - r[src[f]] - 1
                if new < 0:
                    new = 0
                if new != slack[f]:
                    self._set_slack(f, new)
            for f in f_out[u]:
                new = r[dst[f]] - ru - 1
                if new < 0:
                    new = 0
                if new != slack[f]:
                    self._set_slack(f, new)
        for f in added:
            if slack[f] or r[dst[f]] - r[src[f]] - 1 > 0:
                raise InvariantViolation(f"augmenting edge {f} enters with slack")

        for v in touched:
            t[v] = 0
            parent[v] = -1
        for u in visited:
            popped[u] = 0

        outcome = ReliefOutcome(2 if back else 1, edge, relieved, tuple(added), tuple(removed), len(visited))
        if self.check:
            self.audit()
        return outcome

    def audit(self) -> None:
        """Recompute everything from scratch and compare with the bookkeeping."""
        g, sub, r = self.graph, self.subgraph, self.ranks
        if not sub.is_balanced():
            raise InvariantViolation("subgraph lost degree balance")
        if not conforms(r, sub, g):
            raise InvariantViolation("rank no longer conforms to the subgraph")
        total = positive = 0
        for e in range(g.m):
            want = max(r[g.targets[e]] - r[g.sources[e]] - 1, 0) if sub.member[e] else 0
            if self.slack[e] != want:
                raise InvariantViolation(f"registry slack {self.slack[e]} != {want} for edge {e}")
            total += want
            positive += want > 0
        if (total, positive) != (self.total_slack, self.positive):
            raise InvariantViolation("registry totals drifted")
        actual = graph_agony(g, r)
        if actual != self.agony:
            raise InvariantViolation(f"agony {actual} != |F| + slack = {self.agony}")

    def run(
        self,
        epsilon: Fraction | float | int = 0,
        callback: Callable[["AgonySolver", ReliefOutcome], None] | None = None,
    ) -> AgonyResult:
        eps = Fraction(epsilon)
        if eps < 0:
            raise ContractError("epsilon must be nonnegative")
        trace = IterationTrace()
        trace.append(0, self.agony, self.eulerian_edges, 0, 0)
        iterations = augmentations = 0
        while self.agony > self.eulerian_edges:
            if eps and self.eulerian_edges and Fraction(self.agony, self.eulerian_edges) <= 1 + eps:
                break
            edge = self.select_max_slack_edge()
            if edge is None:
                raise InvariantViolation("agony exceeds |F| but no edge of F has slack")
            outcome = self.relieve(edge)
            iterations += 1
            augmentations += outcome.case == 2
            trace.append(iterations, self.agony, self.eulerian_edges, outcome.case, outcome.relieved)
            if callback is not None:
                callback(self, outcome)
        log.debug("min_agony: %d iterations, agony %d, |F| %d", iterations, self.agony, self.eulerian_edges)
        return AgonyResult(
            ranks=normalize(self.ranks),
            subgraph=self.subgraph.copy(),
            agony=self.agony,
            eulerian_edges=self.eulerian_edges,
            iterations=iterations,
            trace=trace,
            augmentations=augmentations,
        )


def relief(
    graph: DirectedGraph,
    subgraph: EulerianSubgraph,
    ranks: list[int],
    edge: int,
    speedup: bool = True,
    check: bool = False,
) -> tuple[EulerianSubgraph, list[int], int]:
    """One relief step on copies of the inputs; returns ``(F', r', case)``."""
    solver = AgonySolver(graph, subgraph, ranks, speedup=speedup, check=check)
    outcome = solver.relieve(edge)
    return solver.subgraph, solver.ranks, outcome.case


def min_agony(
    graph: DirectedGraph,
    subgraph: EulerianSubgraph,
    ranks: list[int],
    epsilon: Fraction | float | int = 0,
    speedup: bool = True,
    check: bool = False,
    callback: Callable[[AgonySolver, ReliefOutcome], None] | None = None,
) -> AgonyResult:
    """Relieve the largest-slack edge until agony meets ``|F|``.

    With ``epsilon > 0`` the loop stops as soon as ``agony / |F|`` is at
    most ``1 + epsilon``; the result then carries a certified ratio
    rather than an optimum.
    """
    solver = AgonySolver(graph, subgraph, ranks, speedup=speedup, check=check)
    return solver.run(epsilon=epsilon, callback=callback)
