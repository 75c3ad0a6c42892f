import io

import pytest
from hypothesis import given, strategies as st

from agony import ContractError, DirectedGraph, EdgeListParseError, EulerianSubgraph, loads_edge_list, remainder_graph
from agony.graph import dumps_edge_list, read_edge_list

from conftest import HL, HR, subgraph_of


def test_comment_and_data_lines():
    g = loads_edge_list("# c\n1 2\n2 1")
    assert (g.n, g.m) == (2, 2)
    assert g.labels == ("1", "2")


def test_self_loop_dropped_and_counted():
    g = loads_edge_list("3 3\n3 4")
    assert (g.n, g.m, g.self_loops_dropped) == (2, 1, 1)


@pytest.mark.parametrize("dedupe, m", [(True, 1), (False, 2)])
def test_dedupe_flag(dedupe, m):
    g = loads_edge_list("1 2\n1 2", dedupe=dedupe)
    assert g.m == m
    assert g.duplicates_dropped == 2 - m


def test_empty_input_is_empty_graph():
    g = loads_edge_list("")
    assert (g.n, g.m) == (0, 0)


def test_malformed_line_reports_line_number():
    with pytest.raises(EdgeListParseError) as info:
        loads_edge_list("# header\n1 2\n1 2 3\n")
    assert info.value.lineno == 3


def test_tokens_need_not_be_integers():
    g = loads_edge_list("alice bob\nbob carol\n")
    assert g.labels == ("alice", "bob", "carol")
    assert g.edge(1) == (1, 2)


def test_gzip_input(tmp_path):
    import gzip

    path = tmp_path / "g.txt.gz"
    with gzip.open(path, "wt") as fh:
        fh.write("# x\n1 2\n2 3\n")
    assert read_edge_list(path).m == 2


def test_remainder_fixtures(gl, gr):
    def rest(g, pairs):
        return {g.edge(e) for e in remainder_graph(g, subgraph_of(g, pairs))}

    named = lambda g, pairs: {(g.vertex(u), g.vertex(v)) for u, v in pairs}
    assert rest(gl, HL) == named(gl, [("e", "h"), ("g", "h"), ("a", "e")])
    assert rest(gr, HR) == named(gr, [("a", "c"), ("e", "h"), ("g", "h")])
    assert list(remainder_graph(gl, EulerianSubgraph(gl))) == list(range(gl.m))


def test_remainder_rejects_foreign_subgraph(gl, gr):
    with pytest.raises(ContractError):
        list(remainder_graph(gl, EulerianSubgraph(gr)))


tokens = st.text(alphabet="abcdefghij0123456789", min_size=1, max_size=3)


@given(st.lists(st.tuples(tokens, tokens), max_size=40), st.booleans())
def test_round_trip_and_adjacency(pairs, dedupe):
    g = DirectedGraph.from_edges(pairs, dedupe=dedupe)
    assert all(u != v for u, v in g.edges())
    assert sum(map(len, g.out_edges)) == sum(map(len, g.in_edges)) == g.m
    for e, (u, v) in enumerate(g.edges()):
        assert g.out_edges[u].count(e) == 1 and g.in_edges[v].count(e) == 1
    for v in range(g.n):
        assert len(g.in_edges[v]) == sum(1 for _, t in g.edges() if t == v)

    again = loads_edge_list(dumps_edge_list(g))
    labelled = lambda h: [(h.labels[u], h.labels[v]) for u, v in h.edges()]
    assert sorted(labelled(again)) == sorted(labelled(g))
    # deterministic id assignment
    assert loads_edge_list(dumps_edge_list(g)).labels == again.labels


def test_output_uses_single_tab(gl):
    first = dumps_edge_list(gl).splitlines()[0]
    assert first == "b\ta"
