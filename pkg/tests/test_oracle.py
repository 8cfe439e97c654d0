import pytest

from helpers import P4I, TRI, TWO_DISJOINT, fixture
from pairdom.errors import InvalidSolution, ScaleExceeded
from pairdom.instances import GenConfig, generate
from pairdom.model import adjacency
from pairdom.oracle import (
    has_perfect_matching,
    is_dominating,
    is_valid_solution,
    min_paired_dominating_bruteforce,
    verify_pairs,
)


def test_is_dominating():
    adj = adjacency(P4I)
    assert is_dominating(adj, {1, 2})
    assert not is_dominating(adj, {0})
    assert is_dominating(adj, range(4))


def test_has_perfect_matching():
    assert has_perfect_matching(adjacency(P4I), {1, 2})
    assert not has_perfect_matching(adjacency(P4I), {0, 3})
    assert not has_perfect_matching(adjacency(TRI), {0, 1, 2})
    assert has_perfect_matching(adjacency(P4I), set())


def test_oracle_minimums():
    r = min_paired_dominating_bruteforce(P4I, witnesses=True)
    assert r.min_size == 2
    assert r.witnesses == (frozenset({1, 2}),)
    assert min_paired_dominating_bruteforce(TRI).min_size == 2
    assert not min_paired_dominating_bruteforce(TWO_DISJOINT).feasible


def test_oracle_on_fixtures():
    assert min_paired_dominating_bruteforce(fixture("fig1.interval")).min_size == 4
    assert min_paired_dominating_bruteforce(fixture("fig2.circular")).min_size == 4


def test_oracle_scale_limit():
    with pytest.raises(ScaleExceeded):
        min_paired_dominating_bruteforce(generate(GenConfig("interval", 17, 1)))


def test_verify_pairs():
    verify_pairs(P4I, [(1, 2)])
    for bad in ([(0, 3)], [(0, 1)], [(1, 1)], [(1, 2), (2, 3)], [], [(1, 9)]):
        with pytest.raises(InvalidSolution):
            verify_pairs(P4I, bad)
    assert is_valid_solution(TRI, [(0, 1)])
    assert not is_valid_solution(TRI, [(0, 2), (1, 2)])


def test_verify_agrees_with_definitions():
    import itertools
    import random

    from pairdom.instances import ALLOW

    rng = random.Random(31)
    for _ in range(150):
        kind = rng.choice(["interval", "circular"])
        m = generate(GenConfig(kind, rng.randint(3, 8), rng.getrandbits(32), ALLOW))
        adj = adjacency(m)
        edges = list(adj.edges())
        for k in (1, 2):
            for pairs in itertools.combinations(edges, k):
                S = [v for e in pairs for v in e]
                expect = len(set(S)) == len(S) and is_dominating(adj, S)
                assert is_valid_solution(m, pairs) == expect
