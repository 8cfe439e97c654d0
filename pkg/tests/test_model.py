import pytest

from helpers import P4I, TRI, TWO_DISJOINT
from pairdom.errors import MalformedModel
from pairdom.model import (
    adjacency,
    arcs_intersect,
    lift_to_arcs,
    point_in_arc,
    validate_arc_model,
    validate_interval_model,
    vertex_name,
)


def test_p4i_kept_in_given_order():
    assert P4I.pairs() == [(1, 3), (2, 5), (4, 7), (6, 8)]


def test_nested_pair_is_valid():
    m = validate_interval_model([(1, 4), (2, 3)])
    assert m.pairs() == [(1, 4), (2, 3)]


def test_interval_input_is_sorted_by_left_endpoint():
    m = validate_interval_model([(4, 7), (1, 3), (6, 8), (2, 5)])
    assert m == P4I


@pytest.mark.parametrize(
    "raw",
    [
        [(1, 3), (2, 3), (4, 5), (6, 8)],  # duplicate label
        [(1, 2)],  # too small
        [(2, 1), (3, 4)],  # reversed
        [(1, 2), (3, 5)],  # label outside 1..2n
    ],
)
def test_bad_interval_models(raw):
    with pytest.raises(MalformedModel):
        validate_interval_model(raw)


def test_tri_is_valid():
    assert TRI.pairs() == [(1, 4), (3, 6), (5, 2)]
    assert TRI.m == 6


def test_arc_model_renumbered_by_head():
    assert validate_arc_model([(5, 2), (1, 4), (3, 6)]) == TRI


@pytest.mark.parametrize(
    "raw",
    [
        [(2, 5), (1, 4), (5, 2)],  # duplicate labels
        [(1, 6), (2, 5), (3, 4)],  # full circle
        [(2, 4), (3, 6), (5, 1)],  # label 1 is a tail
        [(1, 2), (3, 4)],  # too small
    ],
)
def test_bad_arc_models(raw):
    with pytest.raises(MalformedModel):
        validate_arc_model(raw)


def test_malformed_is_a_value_error():
    with pytest.raises(ValueError):
        validate_interval_model([])


def test_point_in_arc():
    assert point_in_arc(1, 2, TRI)
    assert not point_in_arc(3, 2, TRI)
    assert point_in_arc(4, 0, TRI)
    assert point_in_arc(6, 2, TRI)


def test_arcs_intersect():
    assert arcs_intersect(0, 1, TRI)
    assert arcs_intersect(2, 0, TRI)
    lifted = lift_to_arcs(P4I)
    assert not arcs_intersect(0, 3, lifted)
    assert arcs_intersect(0, 1, lifted)


def test_adjacency():
    assert sorted(adjacency(P4I).edges()) == [(0, 1), (1, 2), (2, 3)]
    assert sorted(adjacency(TRI).edges()) == [(0, 1), (0, 2), (1, 2)]
    assert list(adjacency(TWO_DISJOINT).edges()) == []
    assert adjacency(P4I).closed(1) == {0, 1, 2}


def test_interval_and_lifted_arc_adjacency_agree():
    import random

    from pairdom.instances import ALLOW, GenConfig, generate

    rng = random.Random(5)
    for _ in range(200):
        m = generate(GenConfig("interval", rng.randint(3, 15), rng.getrandbits(32), ALLOW))
        if (1, 2 * m.n) in m.pairs():
            continue  # would lift to a full circle
        assert adjacency(m) == adjacency(lift_to_arcs(m))


def test_lift_rejects_full_span():
    with pytest.raises(MalformedModel):
        lift_to_arcs(validate_interval_model([(1, 6), (2, 3), (4, 5)]))


def test_vertex_name():
    assert vertex_name(0) == "v1"
    assert vertex_name(10) == "v11"
