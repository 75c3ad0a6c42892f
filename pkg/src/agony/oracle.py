"""Exhaustive ground truth for tiny graphs.

``brute_min_agony`` tries every rank in ``{0, ..., n-1}^n``. That range
loses nothing: if some level between the lowest and highest rank is
empty, shifting every vertex above it down by one keeps forward edges
forward and never widens a backward edge, so some optimum uses at most
``n`` consecutive levels.

``brute_max_eulerian`` enumerates edge subsets. The two halves of the
edge list are enumerated separately and joined on their net-flow
vectors, which covers all ``2^m`` subsets at the cost of ``2^(m/2)``
work per side.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ContractError
from .eulerian import EulerianSubgraph
from .graph import DirectedGraph

MAX_RANK_VERTICES = 8
MAX_SUBSET_EDGES = 40


@lru_cache(maxsize=4)
def _rank_block(n: int) -> np.ndarray:
    """All assignments of ``{0..n-1}`` to ``n - 1`` vertices, one per row."""
    grid = np.indices((n,) * (n - 1), dtype=np.int16).reshape(n - 1, -1).T
    return np.ascontiguousarray(grid)


def brute_min_agony(graph: DirectedGraph) -> tuple[int, list[int]]:
    n = graph.n
    if n > MAX_RANK_VERTICES:
        raise ContractError(f"brute_min_agony enumerates n^n ranks; refusing n={n} > {MAX_RANK_VERTICES}")
    if n == 0:
        return 0, []
    if n == 1:
        return 0, [0]
    rest = _rank_block(n)
    best_value, best_rank = None, None
    # vertex 0 is fixed per block, the other n - 1 vary over all rows
    for lead in range(n):
        ranks = np.empty((len(rest), n), dtype=np.int16)
        ranks[:, 0] = lead
        ranks[:, 1:] = rest
        total = np.zeros(len(rest), dtype=np.int32)
        for u, v in graph.edges():
            total += np.maximum(ranks[:, u] - ranks[:, v] + 1, 0)
        i = int(np.argmin(total))
        if best_value is None or total[i] < best_value:
            best_value, best_rank = int(total[i]), ranks[i].tolist()
    return best_value, best_rank


def _half_flows(graph: DirectedGraph, edges: list[int]) -> tuple[np.ndarray, np.ndarray]:
    """Net flow vector and size for every subset of ``edges``."""
    k = len(edges)
    masks = np.arange(1 << k, dtype=np.int64)
    flow = np.zeros((1 << k, graph.n), dtype=np.int64)
    sizes = np.zeros(1 << k, dtype=np.int64)
    for bit, e in enumerate(edges):
        on = (masks >> bit) & 1
        u, v = graph.edge(e)
        flow[:, u] += on
        flow[:, v] -= on
        sizes += on
    return flow, sizes


def _encode(flow: np.ndarray, base: int) -> np.ndarray:
    key = np.zeros(len(flow), dtype=np.int64)
    for col in range(flow.shape[1]):
        key = key * base + (flow[:, col] + base // 2)
    return key


def brute_max_eulerian(graph: DirectedGraph) -> tuple[int, EulerianSubgraph]:
    """Largest edge subset with equal in- and out-degree at every vertex.

    Among maximum subsets the witness is the one whose second-half mask,
    then first-half mask, is smallest.
    """
    m = graph.m
    if m > MAX_SUBSET_EDGES:
        raise ContractError(f"brute_max_eulerian enumerates edge subsets; refusing m={m} > {MAX_SUBSET_EDGES}")
    if m == 0:
        return 0, EulerianSubgraph(graph)
    half = m // 2
    left, right = list(range(half)), list(range(half, m))
    base = 2 * m + 1
    if graph.n * np.log2(base) > 62:
        raise ContractError("flow vectors too wide to encode")
    flow_a, size_a = _half_flows(graph, left)
    flow_b, size_b = _half_flows(graph, right)
    key_a = _encode(flow_a, base)
    key_b = _encode(-flow_b, base)

    # best left subset per key: sort by key, then by -size, then mask
    order = np.lexsort((np.arange(len(key_a)), -size_a, key_a))
    sorted_keys = key_a[order]
    first = np.ones(len(order), dtype=bool)
    first[1:] = sorted_keys[1:] != sorted_keys[:-1]
    uniq_keys = sorted_keys[first]
    uniq_mask = order[first]
    uniq_size = size_a[uniq_mask]

    pos = np.searchsorted(uniq_keys, key_b)
    pos_clipped = np.minimum(pos, len(uniq_keys) - 1)
    hit = uniq_keys[pos_clipped] == key_b
    totals = np.where(hit, size_b + uniq_size[pos_clipped], -1)
    mask_b = int(np.argmax(totals))
    mask_a = int(uniq_mask[pos_clipped[mask_b]])
    chosen = [left[i] for i in range(len(left)) if mask_a >> i & 1]
    chosen += [right[i] for i in range(len(right)) if mask_b >> i & 1]
    witness = EulerianSubgraph(graph, chosen)
    return witness.size, witness
