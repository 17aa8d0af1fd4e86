import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_automorphisms, brute_force_strata
from spinmoduli.errors import OutOfWindowError, StructureError
from spinmoduli.graphs import (
    StableGraph,
    automorphism_count,
    canonical_form,
    canonical_key,
    enumerate_one_node,
    enumerate_strata,
    is_isomorphic,
    is_stable,
    strata_count_by_edges,
    total_genus,
)


def test_stability_examples():
    assert is_stable(StableGraph((1,), (), (0,)))
    assert not is_stable(StableGraph((0,), (), (0, 0)))
    assert not is_stable(StableGraph((0, 0), ((0, 1),), (0, 0, 1)))


def test_total_genus_examples():
    assert total_genus(StableGraph((0,), ((0, 0),))) == 1
    assert total_genus(StableGraph((1, 1), ((0, 1),))) == 2
    assert total_genus(StableGraph((1,), ((0, 0),), (0, 0, 0))) == 2


def test_total_genus_rejects_disconnected():
    with pytest.raises(StructureError):
        total_genus(StableGraph((1, 1)))


def test_malformed_graphs_rejected():
    with pytest.raises(StructureError):
        StableGraph(())
    with pytest.raises(StructureError):
        StableGraph((0,), ((0, 1),))
    with pytest.raises(StructureError):
        StableGraph((0,), (), (3,))


def test_key_examples():
    loop = StableGraph((0,), ((0, 0),), (0, 0))
    split = StableGraph((1, 0), ((0, 1),), (1, 1))
    assert canonical_key(loop) != canonical_key(split)
    # legs on the same vertex: swapping labels gives the same labeled graph
    assert canonical_key(loop) == canonical_key(StableGraph((0,), ((0, 0),), (0, 0)))
    G = StableGraph((0, 0, 1), ((0, 1), (1, 2)), (0, 0, 1))
    assert canonical_key(G) == canonical_key(G.relabel([2, 0, 1]))


def test_key_sees_leg_labels():
    G = StableGraph((0, 0), ((0, 1),), (0, 0, 1, 1))
    H = StableGraph((0, 0), ((0, 1),), (0, 1, 0, 1))
    assert not is_isomorphic(G, H)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (StableGraph((1, 1), ((0, 1),)), 2),
        (StableGraph((0,), ((0, 0),), (0, 0)), 2),
        (StableGraph((2,)), 1),
        (StableGraph((0,), ((0, 0), (0, 0))), 8),
        (StableGraph((0, 0), ((0, 1), (0, 1), (0, 1))), 12),
        (StableGraph((1, 0), ((0, 1), (1, 1)), (1,)), 2),
    ],
)
def test_automorphism_examples(graph, expected):
    assert automorphism_count(graph) == expected


def _small_strata():
    for g, n in [(0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)]:
        for G in enumerate_strata(g, n):
            if 2 * G.num_edges <= 8 and G.num_vertices <= 3:
                yield G


def test_automorphisms_match_half_edge_brute_force():
    checked = 0
    for G in _small_strata():
        if 2 * G.num_edges > 6:
            continue
        assert automorphism_count(G) == brute_force_automorphisms(G.genera, G.edges, G.legs), G
        checked += 1
    assert checked > 30


@pytest.mark.parametrize("g, n, count", [(1, 1, 2), (0, 4, 4), (0, 5, 26), (1, 2, 5), (2, 0, 7)])
def test_strata_counts(g, n, count):
    assert len(enumerate_strata(g, n)) == count


@pytest.mark.parametrize("g, n", [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)])
def test_strata_match_brute_force(g, n):
    ours = {canonical_key(G) for G in enumerate_strata(g, n)}
    theirs = {canonical_key(StableGraph(*rep)) for rep in brute_force_strata(g, n)}
    assert len(ours) == len(enumerate_strata(g, n))
    assert ours == theirs


def test_strata_are_stable_canonical_and_of_right_type():
    for g, n in [(1, 4), (2, 2)]:
        for G in enumerate_strata(g, n):
            assert is_stable(G)
            assert total_genus(G) == g and G.n == n
            assert canonical_form(G) == G


def test_count_by_edges():
    assert strata_count_by_edges(0, 5) == {0: 1, 1: 10, 2: 15}
    assert sum(strata_count_by_edges(1, 3).values()) == 23


@pytest.mark.parametrize("g, n, count", [(1, 2, 2), (0, 5, 10), (2, 0, 2), (1, 3, 5)])
def test_one_node(g, n, count):
    one = enumerate_one_node(g, n)
    assert len(one) == count
    assert {canonical_key(G) for G in one} == {
        canonical_key(G) for G in enumerate_strata(g, n) if G.num_edges == 1
    }


def test_window_errors():
    with pytest.raises(OutOfWindowError):
        enumerate_strata(3, 0)
    with pytest.raises(OutOfWindowError):
        enumerate_strata(0, 6)
    with pytest.raises(StructureError):
        enumerate_strata(0, 2)


def test_text_round_trip():
    for G in enumerate_strata(1, 3):
        assert StableGraph.from_text(G.to_text()) == G
    with pytest.raises(StructureError):
        StableGraph.from_text('{"genera": [0], "legs": {"2": 0}}')


POOL = [G for g, n in [(0, 5), (1, 3), (2, 1), (2, 2)] for G in enumerate_strata(g, n)]


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, len(POOL) - 1), st.randoms(use_true_random=False))
def test_key_invariant_under_relabeling(index, rnd):
    G = POOL[index]
    perm = list(range(G.num_vertices))
    rnd.shuffle(perm)
    H = G.relabel(perm)
    assert canonical_key(H) == canonical_key(G)
    assert automorphism_count(H) == automorphism_count(G)


def test_distinct_classes_have_distinct_keys():
    rng = random.Random(7)
    for g, n in [(1, 3), (2, 1)]:
        strata = enumerate_strata(g, n)
        keys = {canonical_key(G.relabel(rng.sample(range(G.num_vertices), G.num_vertices)))
                for G in strata}
        assert len(keys) == len(strata)
