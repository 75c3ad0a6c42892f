import os
import random
from pathlib import Path

import pytest

from agony import DirectedGraph, EulerianSubgraph

GL_EDGES = [("b", "a"), ("a", "c"), ("c", "d"), ("d", "b"), ("f", "e"),
            ("e", "g"), ("g", "f"), ("e", "h"), ("g", "h"), ("a", "e")]
GR_EDGES = GL_EDGES + [("e", "c")]
RL = dict(a=0, f=0, b=1, e=1, g=1, c=2, h=2, d=3)
RR = dict(a=1, b=1, f=1, g=1, e=2, c=3, d=3, h=3)
HL = [("b", "a"), ("a", "c"), ("c", "d"), ("d", "b"), ("f", "e"), ("e", "g"), ("g", "f")]
HR = [("b", "a"), ("a", "e"), ("e", "c"), ("c", "d"), ("d", "b"), ("f", "e"), ("e", "g"), ("g", "f")]

DATA_DIR = Path(os.environ.get("AGONY_DATA", Path(__file__).resolve().parent.parent / "data"))


def subgraph_of(graph, pairs):
    return EulerianSubgraph(graph, [graph.edge_index(u, v) for u, v in pairs])


def random_digraph(rng, n, p, multi=False):
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    if multi:
        edges += [rng.choice(edges) for _ in range(len(edges) // 4)] if edges else []
    return DirectedGraph.from_edges(edges)


def random_edge_graph(rng, n, m):
    """``m`` uniformly drawn ordered pairs; self-loops get dropped, repeats kept."""
    return DirectedGraph.from_edges((rng.randrange(n), rng.randrange(n)) for _ in range(m))


def noisy_hierarchy(rng, n, m, levels=6, noise=0.25):
    """Edges mostly pointing down a hidden level structure."""
    level = [rng.randrange(levels) for _ in range(n)]
    edges = []
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v and (level[u] < level[v] or rng.random() < noise):
            edges.append((u, v))
    return DirectedGraph.from_edges(edges)


def find_dataset(*names):
    for name in names:
        for candidate in (DATA_DIR / name, DATA_DIR / f"{name}.gz"):
            if candidate.exists():
                return candidate
    return None


@pytest.fixture
def gl():
    return DirectedGraph.from_edges(GL_EDGES)


@pytest.fixture
def gr():
    return DirectedGraph.from_edges(GR_EDGES)


@pytest.fixture
def rng():
    return random.Random(20140915)


# one PASS/FAIL/SKIP line per acceptance criterion at the end of the run
_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(number, (title, []))[1].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        if "failed" in outcomes:
            verdict, note = "FAIL", ""
        elif "passed" in outcomes:
            skipped = outcomes.count("skipped")
            verdict, note = "PASS", f" ({skipped} part(s) skipped)" if skipped else ""
        else:
            verdict, note = "SKIP", ""
        terminalreporter.write_line(f"{verdict:4s}  criterion {number:2d}: {title}{note}")
