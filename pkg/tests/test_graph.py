import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquepoly.gen import enumerate_graphs
from cliquepoly.graph import (
    Graph,
    GraphParseError,
    complete_graph,
    cycle_graph,
    delete_edges,
    delete_vertex,
    disjoint_union,
    encode_graph6,
    worked_example_graph,
    format_edge_list,
    induced_subgraph,
    is_clique,
    is_connected,
    iter_graph6_lines,
    k4_plus,
    parse_edge_list,
    parse_graph6,
    path_graph,
)
from corpus import k4_free_chordal_by_extension
from oracles import all_labelled_graphs, brute_connected
from strategies import graphs


def test_edge_list_triangle():
    g = parse_edge_list("3\n0 1\n1 2\n0 2")
    assert (g.n, g.m) == (3, 3)
    assert g == complete_graph(3)


def test_edge_list_single_vertex():
    g = parse_edge_list("1\n")
    assert (g.n, g.m) == (1, 0)


def test_edge_list_comments_and_duplicates():
    g = parse_edge_list("# a path\n\n3\n0 1\n1 0\n# tail\n1 2\n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text, lineno", [
    ("2\n0 0", 2),
    ("3\n0 1\n1 5", 3),
    ("3\n0 1 2", 2),
    ("3\nx y", 2),
    ("three", 1),
])
def test_edge_list_errors_name_line(text, lineno):
    with pytest.raises(GraphParseError, match=f"line {lineno}"):
        parse_edge_list(text)


def test_edge_list_self_loop_message():
    with pytest.raises(GraphParseError, match="self-loop"):
        parse_edge_list("2\n0 0")


def test_edge_list_empty():
    with pytest.raises(GraphParseError, match="empty"):
        parse_edge_list("# nothing\n")


def test_edge_list_roundtrip():
    g = worked_example_graph()
    assert parse_edge_list(format_edge_list(g)) == g


# Hand decode: 'B' -> n = 66 - 63 = 3; the 3 bits x01 x02 x12 are the top
# bits of one 6-bit group. '?' = 0 -> none, '_' = 32 = 100000 -> x01 only,
# 'w' = 56 = 111000 -> all three.
@pytest.mark.parametrize("code, n, edges", [
    ("B?", 3, []),
    ("B_", 3, [(0, 1)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("@", 1, []),
    ("?", 0, []),
])
def test_graph6_hand_decoded(code, n, edges):
    g = parse_graph6(code)
    assert g == Graph.from_edges(n, edges)
    ref = nx.from_graph6_bytes(code.encode())
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == sorted(edges)


def test_graph6_header_tolerated():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


@pytest.mark.parametrize("bad", ["", "   ", "Bww", "C", "B\x7f", "B "])
def test_graph6_errors(bad):
    with pytest.raises(GraphParseError):
        parse_graph6(bad)


def test_graph6_large_n_roundtrip():
    g = cycle_graph(70)
    code = encode_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g
    ref = nx.from_graph6_bytes(code.encode())
    assert ref.number_of_edges() == 70


def test_graph6_stream_reports_line():
    lines = list(iter_graph6_lines("Bw\n\nB?\n"))
    assert [i for i, _ in lines] == [1, 3]
    with pytest.raises(GraphParseError, match="line 2"):
        list(iter_graph6_lines("Bw\nB\n"))


@pytest.mark.parametrize("n", range(0, 6))
def test_graph6_roundtrip_exhaustive_small(n):
    for g in all_labelled_graphs(n):
        code = encode_graph6(g)
        assert parse_graph6(code) == g
        ref = nx.empty_graph(n)
        ref.add_edges_from(g.edges)
        assert code == nx.to_graph6_bytes(ref, nodes=range(n), header=False).decode().strip()


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_graph6_roundtrip(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(3), [0, 1]) == complete_graph(2)
    assert induced_subgraph(k4_plus(), []).n == 0
    h = induced_subgraph(path_graph(3), [0, 2])
    assert (h.n, h.m) == (2, 0)
    with pytest.raises(ValueError):
        induced_subgraph(path_graph(3), [3])


def test_is_clique_examples():
    g = k4_plus()
    for tri in itertools.combinations(range(4), 3):
        assert is_clique(g, tri)
    assert is_clique(g, [])
    assert is_clique(g, [4])
    assert not is_clique(path_graph(3), [0, 1, 2])
    with pytest.raises(ValueError):
        is_clique(g, [9])


def test_delete_examples():
    assert delete_edges(complete_graph(3), [(0, 1)]) == Graph.from_edges(3, [(0, 2), (1, 2)])
    assert delete_vertex(complete_graph(1), 0).n == 0
    star = [(0, 1), (0, 2), (0, 3)]
    rest = delete_vertex(delete_edges(complete_graph(4), star), 0)
    assert (rest.n, rest.m) == (3, 3)
    with pytest.raises(ValueError):
        delete_edges(path_graph(3), [(0, 2)])
    with pytest.raises(ValueError):
        delete_vertex(path_graph(3), 3)


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 0)}))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_is_clique_iff_induced_is_complete(g, data):
    u = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    k = len(u)
    assert is_clique(g, u) == (induced_subgraph(g, u).m == k * (k - 1) // 2)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=6), st.data())
def test_delete_edges_then_vertex_matches_brute_force(g, data):
    doomed = data.draw(st.lists(st.sampled_from(sorted(g.edges)), unique=True)) if g.m else []
    v = data.draw(st.integers(0, g.n - 1))
    h = delete_vertex(delete_edges(g, doomed), v)
    relabel = {u: u - (u > v) for u in range(g.n) if u != v}
    expect = {(relabel[a], relabel[b]) for a, b in g.edges if (a, b) not in set(doomed) and v not in (a, b)}
    assert h.n == g.n - 1
    assert set(h.edges) == expect


def test_adjacency_consistent():
    g = worked_example_graph()
    for v in range(g.n):
        for w in g.adjacency[v]:
            assert v in g.adjacency[w]
            assert (min(v, w), max(v, w)) in g.edges
    assert sum(len(a) for a in g.adjacency) == 2 * g.m


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_connectivity_matches_brute_force(g):
    assert is_connected(g) == brute_connected(g)


def test_disjoint_union():
    g = disjoint_union(complete_graph(3), path_graph(2))
    assert (g.n, g.m) == (5, 4)
    assert g.has_edge(3, 4)
    assert not is_connected(g)


def test_worked_example_counts():
    g = worked_example_graph()
    assert (g.n, g.m) == (6, 9)


@pytest.mark.parametrize("n", [6, 7])
def test_graph6_roundtrip_all_unlabelled(n):
    for g in enumerate_graphs(n):
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_roundtrip_n8_sample():
    # every connected K4-free chordal graph on 8 vertices, plus their complements
    for g in k4_free_chordal_by_extension(8):
        comp = Graph(8, frozenset(itertools.combinations(range(8), 2)) - g.edges)
        for h in (g, comp):
            assert parse_graph6(encode_graph6(h)) == h
