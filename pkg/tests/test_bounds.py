import random

import pytest

from dlucky import (
    Graph,
    build_web,
    complete_graph,
    cycle_graph,
    enumerate_maximum_cliques,
    lower_bound_cor2,
    lower_bound_thm1,
)
from conftest import oracle_maximum_cliques, random_graph


def test_k5_single_maximum_clique():
    records = enumerate_maximum_cliques(complete_graph(5))
    assert len(records) == 1
    rec = records[0]
    assert rec.vertices == (0, 1, 2, 3, 4)
    assert rec.delta == rec.max_deg == 4


def test_c6_maximum_cliques_are_the_edges():
    records = enumerate_maximum_cliques(cycle_graph(6))
    assert [rec.vertices for rec in records] == list(cycle_graph(6).edges)
    assert all(rec.delta == rec.max_deg == 2 for rec in records)


def test_web_graph_has_unique_maximum_clique():
    for m, n in [(3, 5), (3, 6), (4, 6)]:
        fam = build_web(m, n)
        records = enumerate_maximum_cliques(fam.graph, vertex_cap=None)
        assert len(records) == 1
        rec = records[0]
        assert rec.vertices == fam.role_index["clique"]
        assert rec.delta == rec.max_deg == n


def test_enumeration_agrees_with_subset_scan():
    rng = random.Random(301)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        got = [rec.vertices for rec in enumerate_maximum_cliques(g)]
        assert got == oracle_maximum_cliques(g)
    for _ in range(5):
        g = random_graph(rng, 12, 0.5)
        got = [rec.vertices for rec in enumerate_maximum_cliques(g)]
        assert got == oracle_maximum_cliques(g)


def test_each_record_is_a_clique_with_true_degree_extremes():
    rng = random.Random(307)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 10), 0.6)
        records = enumerate_maximum_cliques(g)
        omega = len(records[0].vertices)
        for rec in records:
            assert len(rec.vertices) == omega
            for i, u in enumerate(rec.vertices):
                for v in rec.vertices[i + 1 :]:
                    assert g.has_edge(u, v)
            degs = [g.degree(v) for v in rec.vertices]
            assert rec.delta == min(degs) and rec.max_deg == max(degs)
            # each clique vertex has degree >= omega - 1, so the
            # bound's denominator stays positive
            assert rec.max_deg - omega + 2 >= 1


def test_vertex_cap_refusal_names_the_cap():
    g = Graph(70)
    with pytest.raises(ValueError, match="64"):
        enumerate_maximum_cliques(g)
    assert len(enumerate_maximum_cliques(g, vertex_cap=70)) == 70
    assert len(enumerate_maximum_cliques(g, vertex_cap=None)) == 70


def test_lower_bound_complete_graphs():
    for n in range(2, 7):
        assert lower_bound_thm1(complete_graph(n)) == n


def test_lower_bound_examples():
    from dlucky import build_corona

    assert lower_bound_thm1(build_corona(5, 4).graph) == 2
    assert lower_bound_thm1(build_web(3, 6).graph) == 4


def test_lower_bound_clamps_at_one():
    # star: every maximum clique is an edge with delta 1, Delta 5,
    # making the raw numerator nonpositive
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert lower_bound_thm1(star) == 1


def test_lower_bound_rejects_disconnected_and_empty():
    with pytest.raises(ValueError):
        lower_bound_thm1(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        lower_bound_thm1(Graph(0))


def test_lower_bound_k1():
    assert lower_bound_thm1(Graph(1)) == 1


def test_cor2_values():
    for n in range(2, 8):
        assert lower_bound_cor2(n - 1, n) == n
    assert lower_bound_cor2(8, 5) == 2
    assert lower_bound_cor2(6, 6) == 4


def test_cor2_rejects_impossible_degree():
    with pytest.raises(ValueError):
        lower_bound_cor2(3, 5)
    with pytest.raises(ValueError):
        lower_bound_cor2(1, 0)


def test_bound_sound_against_solver_on_random_corpus():
    from dlucky import exact_eta, is_connected

    rng = random.Random(313)
    checked = 0
    while checked < 25:
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.6))
        if not is_connected(g):
            continue
        result = exact_eta(g, max_k=8)
        assert result.eta is not None
        assert lower_bound_thm1(g) <= result.eta
        checked += 1


def test_thm1_matches_cor2_when_clique_degrees_equal():
    rng = random.Random(311)
    checked = 0
    for _ in range(80):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        from dlucky import is_connected

        if not is_connected(g):
            continue
        records = enumerate_maximum_cliques(g)
        omega = len(records[0].vertices)
        degrees = {
            g.degree(v) for rec in records for v in rec.vertices
        }
        if len(degrees) == 1:
            r = degrees.pop()
            assert lower_bound_thm1(g) == lower_bound_cor2(r, omega)
            checked += 1
    assert checked > 5
