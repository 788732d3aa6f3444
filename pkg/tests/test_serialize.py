import pytest

from dlucky import (
    Graph,
    Labeling,
    build_corona,
    graph_from_json,
    graph_to_json,
    labeling_from_json,
    labeling_to_json,
    to_dot,
)


def test_graph_round_trip():
    g = Graph(4, [(2, 0), (1, 3), (0, 1)], tags=["a", "b", "c", "d"])
    back = graph_from_json(graph_to_json(g))
    assert back == g
    assert back.tags == g.tags


def test_graph_canonical_bytes_are_frozen():
    g = Graph(3, [(2, 1), (0, 2)])
    assert graph_to_json(g) == '{"edges":[[0,2],[1,2]],"n":3}\n'
    tagged = g.with_tags(["x", "y", "z"])
    assert (
        graph_to_json(tagged)
        == '{"edges":[[0,2],[1,2]],"n":3,"tags":["x","y","z"]}\n'
    )


def test_graph_serialization_is_deterministic():
    fam = build_corona(5, 4)
    assert graph_to_json(fam.graph) == graph_to_json(fam.graph)


def test_graph_from_json_validates():
    with pytest.raises(ValueError):
        graph_from_json("not json")
    with pytest.raises(ValueError):
        graph_from_json("[1,2]")
    with pytest.raises(ValueError):
        graph_from_json('{"n":"three","edges":[]}')
    with pytest.raises(ValueError):
        graph_from_json('{"n":2,"edges":[[0,1,2]]}')
    with pytest.raises(ValueError):
        graph_from_json('{"n":2,"edges":[[0,2]]}')  # endpoint out of range
    with pytest.raises(ValueError):
        graph_from_json('{"n":2,"edges":[],"weird":1}')
    with pytest.raises(ValueError):
        graph_from_json('{"n":2,"edges":[],"tags":["only-one"]}')


def test_labeling_round_trip_and_bytes():
    lab = Labeling([2, 1, 3], k_max=4)
    text = labeling_to_json(lab)
    assert text == '{"k":4,"labels":[2,1,3]}\n'
    back = labeling_from_json(text)
    assert back == lab


def test_labeling_defaults_budget_to_max():
    back = labeling_from_json('{"labels":[1,3,2]}')
    assert back.k_max == 3


def test_labeling_from_json_validates():
    with pytest.raises(ValueError):
        labeling_from_json('{"labels":"abc"}')
    with pytest.raises(ValueError):
        labeling_from_json('{"labels":[0]}')
    with pytest.raises(ValueError):
        labeling_from_json('{"labels":[1],"extra":true}')


def test_dot_plain_and_annotated():
    g = Graph(2, [(0, 1)], tags=["clique", "pendant"])
    plain = to_dot(g)
    assert plain.startswith("graph G {")
    assert '  v0 [role="clique"];' in plain
    assert "  v0 -- v1;" in plain

    annotated = to_dot(g, Labeling([1, 2]))
    assert '  v0 [label="1", dsum="3", role="clique"];' in annotated
    assert '  v1 [label="2", dsum="2", role="pendant"];' in annotated


def test_dot_without_tags_or_labels():
    g = Graph(2, [(0, 1)])
    out = to_dot(g)
    assert "  v0;" in out and "  v1;" in out
