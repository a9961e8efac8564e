import json

import pytest

from joinspectra.errors import SpecError
from joinspectra.graphs import Graph, VertexSubset, graph_from_obj, load_graph


def test_validation():
    with pytest.raises(SpecError):
        Graph(3, [(0, 0)])
    with pytest.raises(SpecError):
        Graph(3, [(0, 3)])
    g = Graph(3, [(2, 0), (0, 2), (1, 2)])  # duplicates and order collapse
    assert g.edges == frozenset({(0, 2), (1, 2)})


def test_standard_families():
    assert Graph.path(4).num_edges == 3
    assert Graph.cycle(5).num_edges == 5
    assert Graph.complete(5).num_edges == 10
    assert Graph.empty(3).num_edges == 0
    assert Graph.star(3).degrees() == [3, 1, 1, 1]
    assert Graph.complete_bipartite(2, 3).num_edges == 6
    with pytest.raises(SpecError):
        Graph.cycle(2)


def test_queries():
    g = Graph(4, [(0, 1), (1, 2), (1, 3)])
    assert g.neighbors(1) == {0, 2, 3}
    assert g.degree(1) == 3
    assert g.degrees() == [1, 3, 1, 1]
    assert g.regular_degree() is None
    assert Graph.cycle(4).regular_degree() == 2
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    sub = g.induced((1, 2, 3))
    assert sub.n == 3 and sub.edges == frozenset({(0, 1), (0, 2)})


def test_adjacency_and_degree_matrix():
    g = Graph(3, [(0, 1)])
    a = g.adjacency()
    assert a.to_lists() == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    d = g.degree_matrix()
    assert d.to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 0]]


def test_json_round_trip():
    g = Graph(4, [(0, 1), (2, 3)])
    obj = g.to_json_obj()
    assert Graph.from_json_obj(obj) == g
    assert Graph.from_json_obj(json.loads(json.dumps(obj))) == g
    with pytest.raises(SpecError):
        Graph.from_json_obj({"edges": []})
    with pytest.raises(SpecError):
        Graph.from_json_obj({"n": 2, "edges": [[0]]})


def test_text_round_trip():
    g = Graph(4, [(0, 1), (2, 3)])
    assert Graph.from_text(g.to_text()) == g
    assert Graph.from_text("3;") == Graph.empty(3)
    assert Graph.from_text(" 3 ; 0-1 , 1-2 ") == Graph.path(3)
    with pytest.raises(SpecError):
        Graph.from_text("x; 0-1")
    with pytest.raises(SpecError):
        Graph.from_text("3; 0+1")


def test_loaders():
    assert load_graph('{"n": 2, "edges": [[0, 1]]}') == Graph.complete(2)
    assert load_graph("2; 0-1") == Graph.complete(2)
    assert graph_from_obj("2; 0-1") == graph_from_obj({"n": 2, "edges": [[0, 1]]})


def test_vertex_subset():
    s = VertexSubset(4, (3, 1, 3))
    assert s.members == (1, 3)
    assert s.size == 2 and not s.is_full
    assert 3 in s and 0 not in s
    assert s.complement() == (0, 2)
    assert [int(x) for x in s.indicator()] == [0, 1, 0, 1]
    assert VertexSubset.full(3).is_full
    with pytest.raises(SpecError):
        VertexSubset(2, (2,))
