import random

import pytest

from agony import (
    DirectedGraph, EulerianSubgraph, ResidualGraph, brute_max_eulerian, find_negative_cycle, gupte_min_agony,
    is_maximal_eulerian, max_eulerian_cycle_canceling, solve,
)

from conftest import HL, random_digraph, random_edge_graph, subgraph_of


def test_residual_arcs(gr):
    sub = subgraph_of(gr, HL)
    res = ResidualGraph.build(gr, sub)
    for e, (u, v) in enumerate(gr.edges()):
        if sub.member[e]:
            assert (res.tails[e], res.heads[e], res.weights[e]) == (v, u, 1)
        else:
            assert (res.tails[e], res.heads[e], res.weights[e]) == (u, v, -1)


def test_negative_cycle_on_gr(gr):
    res = ResidualGraph.build(gr, subgraph_of(gr, HL))
    cycle = find_negative_cycle(res)
    assert sum(res.weights[a] for a in cycle) == -1
    names = {(gr.labels[gr.sources[res.edge_ids[a]]], gr.labels[gr.targets[res.edge_ids[a]]]) for a in cycle}
    assert names == {("a", "e"), ("e", "c"), ("a", "c")}
    removal = [a for a in cycle if not res.adds(a)]
    assert [(gr.labels[res.tails[a]], gr.labels[res.heads[a]]) for a in removal] == [("c", "a")]
    # arcs chain head-to-tail
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert res.heads[a] == res.tails[b]


def test_no_negative_cycle_when_maximum(gl):
    assert find_negative_cycle(ResidualGraph.build(gl, subgraph_of(gl, HL))) is None


def test_negative_triangle():
    res = ResidualGraph(3, (0, 1, 2), (1, 2, 0), (-1, -1, -1), (0, 1, 2))
    cycle = find_negative_cycle(res)
    assert sorted(cycle) == [0, 1, 2]
    assert sum(res.weights[a] for a in cycle) == -3


def test_cycle_canceling_fixtures(gl, gr):
    assert max_eulerian_cycle_canceling(gl).size == 7
    assert max_eulerian_cycle_canceling(gr).size == 8
    assert max_eulerian_cycle_canceling(gr, start=subgraph_of(gr, HL)).size == 8
    dag = DirectedGraph.from_edges([(0, 1), (1, 2), (0, 2)])
    assert max_eulerian_cycle_canceling(dag).size == 0


def test_gupte_fixtures(gl, gr):
    assert gupte_min_agony(gl, check=True).agony == 7
    result = gupte_min_agony(gr, check=True)
    assert result.agony == 8 == solve(gr).agony
    assert result.augmentations == 0


def test_canceling_reaches_brute_force_maximum():
    rng = random.Random(7)
    for _ in range(150):
        g = random_digraph(rng, rng.randint(2, 6), rng.choice([0.2, 0.5, 0.8]), multi=rng.random() < 0.2)
        if g.m > 24:
            continue
        sub = max_eulerian_cycle_canceling(g)
        assert sub.is_balanced()
        assert sub.size == brute_max_eulerian(g)[0]
        assert is_maximal_eulerian(g, sub)


def test_gupte_matches_relief_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        g = random_edge_graph(rng, rng.randint(2, 30), rng.randint(1, 250))
        assert gupte_min_agony(g).agony == solve(g).agony
