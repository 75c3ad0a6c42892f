"""Directed multigraph storage and SNAP-style edge-list I/O.

Vertices get dense integer ids in order of first appearance. Edges keep
their input order and are addressed by index, so parallel edges stay
distinguishable.
"""

from __future__ import annotations

import gzip
import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .errors import ContractError, EdgeListParseError


@dataclass(frozen=True)
class DirectedGraph:
    labels: tuple[str, ...]
    sources: tuple[int, ...]
    targets: tuple[int, ...]
    out_edges: tuple[tuple[int, ...], ...]
    in_edges: tuple[tuple[int, ...], ...]
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0
    # out-adjacency flattened by source: edges of u sit at csr_offsets[u]:csr_offsets[u+1]
    csr_offsets: tuple[int, ...] = ()
    csr_targets: tuple[int, ...] = ()
    csr_edges: tuple[int, ...] = ()
    _index: dict[str, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.sources)

    def edge(self, e: int) -> tuple[int, int]:
        return self.sources[e], self.targets[e]

    def edges(self) -> Iterator[tuple[int, int]]:
        return zip(self.sources, self.targets)

    def vertex(self, label: str) -> int:
        return self._index[label]

    def edge_index(self, u: str, v: str) -> int:
        """Lowest index of an edge ``u -> v`` given by labels."""
        iu, iv = self._index[u], self._index[v]
        for e in self.out_edges[iu]:
            if self.targets[e] == iv:
                return e
        raise KeyError((u, v))

    def ranks_from_labels(self, mapping: dict[str, int]) -> list[int]:
        return [mapping[label] for label in self.labels]

    def ranks_to_labels(self, ranks: list[int]) -> dict[str, int]:
        return dict(zip(self.labels, ranks))

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[object, object]], dedupe: bool = False) -> "DirectedGraph":
        """Build a graph from (source, target) label pairs.

        Self-loops are dropped and counted. With ``dedupe`` repeated pairs
        collapse to their first occurrence.
        """
        index: dict[str, int] = {}
        labels: list[str] = []
        sources: list[int] = []
        targets: list[int] = []
        seen: set[tuple[int, int]] = set()
        loops = dups = 0
        for a, b in pairs:
            ids = []
            for token in (str(a), str(b)):
                i = index.get(token)
                if i is None:
                    i = index[token] = len(labels)
                    labels.append(token)
                ids.append(i)
            u, v = ids
            if u == v:
                loops += 1
                continue
            if dedupe:
                if (u, v) in seen:
                    dups += 1
                    continue
                seen.add((u, v))
            sources.append(u)
            targets.append(v)

        n = len(labels)
        out_adj: list[list[int]] = [[] for _ in range(n)]
        in_adj: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(zip(sources, targets)):
            out_adj[u].append(e)
            in_adj[v].append(e)
        offsets = [0]
        for adj in out_adj:
            offsets.append(offsets[-1] + len(adj))
        csr_edges = tuple(e for adj in out_adj for e in adj)
        return cls(
            labels=tuple(labels),
            sources=tuple(sources),
            targets=tuple(targets),
            out_edges=tuple(map(tuple, out_adj)),
            in_edges=tuple(map(tuple, in_adj)),
            self_loops_dropped=loops,
            duplicates_dropped=dups,
            csr_offsets=tuple(offsets),
            csr_targets=tuple(targets[e] for e in csr_edges),
            csr_edges=csr_edges,
            _index=index,
        )


def parse_edge_lines(stream: Iterable[str]) -> Iterator[tuple[str, str]]:
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, raw.rstrip("\n"), f"expected 2 tokens, got {len(tokens)}")
        yield tokens[0], tokens[1]


def load_edge_list(stream: TextIO | Iterable[str], dedupe: bool = False) -> DirectedGraph:
    """Read a SNAP-style edge list.

    Lines starting with ``#`` are comments and blank lines are skipped.
    Every other line must hold exactly two whitespace-separated tokens.
    """
    return DirectedGraph.from_edges(parse_edge_lines(stream), dedupe=dedupe)


def loads_edge_list(text: str, dedupe: bool = False) -> DirectedGraph:
    return load_edge_list(io.StringIO(text), dedupe=dedupe)


def read_edge_list(path, dedupe: bool = False) -> DirectedGraph:
    """Load an edge-list file; ``.gz`` files are decompressed on the fly."""
    opener = gzip.open if str(path).endswith(".gz") else open
    with opener(path, "rt", encoding="utf-8") as fh:
        return load_edge_list(fh, dedupe=dedupe)


def write_edge_list(graph: DirectedGraph, stream: TextIO, edges: Iterable[int] | None = None) -> None:
    labels = graph.labels
    for e in range(graph.m) if edges is None else edges:
        stream.write(f"{labels[graph.sources[e]]}\t{labels[graph.targets[e]]}\n")


def dumps_edge_list(graph: DirectedGraph, edges: Iterable[int] | None = None) -> str:
    buf = io.StringIO()
    write_edge_list(graph, buf, edges)
    return buf.getvalue()


def remainder_graph(graph: DirectedGraph, subgraph) -> Iterator[int]:
    """Indices of the edges of ``graph`` that are not members of ``subgraph``."""
    member = subgraph.member
    if len(member) != graph.m:
        raise ContractError(f"subgraph indexes {len(member)} edges, graph has {graph.m}")
    return (e for e in range(graph.m) if not member[e])
