import random

import pytest

from dlucky import (
    Graph,
    Labeling,
    available_backends,
    complete_graph,
    corona,
    cycle_graph,
    exact_eta,
    exists_labeling,
    path_graph,
    solver_backend,
    verify,
)
from conftest import oracle_eta, oracle_exists_labeling, random_graph


def test_backend_reports_something_sensible():
    assert solver_backend() in ("compiled", "pure")
    assert "pure" in available_backends()


def test_k3_needs_three_labels():
    res = exact_eta(complete_graph(3), max_k=4)
    assert res.eta == 3
    assert verify(complete_graph(3), res.witness).is_d_lucky


def test_p4_is_two():
    # frozen from the brute-force oracle: all-ones fails on the middle edge
    g = path_graph(4)
    assert oracle_eta(g, 3) == 2
    res = exact_eta(g, max_k=3)
    assert res.eta == 2
    assert verify(g, res.witness).is_d_lucky
    assert verify(g, Labeling([1, 1, 2, 1])).is_d_lucky  # known witness


def test_c4_is_two():
    g = cycle_graph(4)
    assert oracle_eta(g, 3) == 2
    res = exact_eta(g, max_k=3)
    assert res.eta == 2
    assert verify(g, res.witness).is_d_lucky
    assert verify(g, Labeling([1, 2, 1, 2])).is_d_lucky  # known witness


def test_exists_labeling_k2_cases():
    assert exists_labeling(complete_graph(2), 1) is None
    found = exists_labeling(complete_graph(2), 2)
    assert found is not None and verify(complete_graph(2), found).is_d_lucky


def test_exists_matches_claimed_on_tiny_corona():
    g = corona(complete_graph(2), complete_graph(1))
    assert exists_labeling(g, 1) is None
    assert exists_labeling(g, 2) is not None  # matches the family's claimed value


def test_agreement_with_brute_force_oracle():
    rng = random.Random(401)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 5), rng.random())
        for k in (1, 2, 3):
            mine = exists_labeling(g, k)
            brute = oracle_exists_labeling(g, k)
            assert (mine is None) == (brute is None)
            if mine is not None:
                assert verify(g, mine).is_d_lucky
                assert max(mine.labels) <= k


def test_exact_eta_agrees_with_oracle_on_small_graphs():
    rng = random.Random(409)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 5), rng.random())
        assert exact_eta(g, max_k=5).eta == oracle_eta(g, 5)


def test_monotonicity():
    rng = random.Random(419)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        for k in (1, 2):
            if exists_labeling(g, k) is not None:
                assert exists_labeling(g, k + 1) is not None


def test_determinism_same_inputs_same_everything():
    rng = random.Random(421)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 7), 0.5)
        a = exact_eta(g, max_k=4)
        b = exact_eta(g, max_k=4)
        assert a.eta == b.eta
        assert a.nodes_explored == b.nodes_explored
        assert (a.witness is None and b.witness is None) or (
            a.witness.labels == b.witness.labels
        )


@pytest.mark.skipif(
    "compiled" not in available_backends(), reason="compiled kernel not built"
)
def test_backends_are_interchangeable():
    rng = random.Random(431)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        fast = exact_eta(g, max_k=4, backend="compiled")
        slow = exact_eta(g, max_k=4, backend="pure")
        assert fast.eta == slow.eta
        assert fast.nodes_explored == slow.nodes_explored
        if fast.witness is not None:
            assert fast.witness.labels == slow.witness.labels


def test_budget_exhaustion_is_reported():
    res = exact_eta(complete_graph(4), max_k=3)
    assert res.exceeded
    assert res.eta is None and res.witness is None
    assert res.k_tried == 3
    assert res.nodes_explored > 0


def test_vertex_cap_enforced_and_adjustable():
    g = path_graph(17)
    with pytest.raises(ValueError, match="16"):
        exact_eta(g, max_k=2)
    assert exact_eta(g, max_k=2, vertex_cap=17).eta == 2


def test_bad_arguments_rejected():
    with pytest.raises(ValueError):
        exact_eta(path_graph(2), max_k=0)
    with pytest.raises(ValueError):
        exact_eta(Graph(0), max_k=2)
    with pytest.raises(ValueError):
        exists_labeling(path_graph(2), 0)
    with pytest.raises(ValueError):
        exact_eta(path_graph(2), max_k=2, backend="gpu")


def test_witness_respects_budget_flag():
    res = exact_eta(cycle_graph(5), max_k=4)
    assert res.witness.k_max == res.eta
