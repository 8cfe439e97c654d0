import random

import pytest

from helpers import P4I, TRI, fixture
from pairdom.errors import GenExhausted, MalformedModel, ParseError
from pairdom.instances import (
    ALLOW,
    FORBID,
    GenConfig,
    generate,
    has_isolated_vertex,
    normalize,
    parse,
    serialize,
)
from pairdom.model import ArcModel, validate_arc_model, validate_interval_model


def test_generate_interval():
    m = generate(GenConfig("interval", 4, 1, FORBID))
    assert m.n == 4 and not has_isolated_vertex(m)
    assert validate_interval_model(m.pairs()) == m


def test_generate_is_deterministic():
    for kind, n in (("interval", 4), ("circular", 9)):
        a = serialize(generate(GenConfig(kind, n, 1)))
        b = serialize(generate(GenConfig(kind, n, 1)))
        assert a == b


def test_generate_circular():
    m = generate(GenConfig("circular", 3, 7, FORBID))
    assert isinstance(m, ArcModel)
    assert validate_arc_model(m.pairs()) == m
    assert m.head[0] == 1


def test_generated_models_are_valid_and_feasible():
    rng = random.Random(41)
    for _ in range(300):
        kind = rng.choice(["interval", "circular"])
        m = generate(GenConfig(kind, rng.randint(3, 30), rng.getrandbits(32)))
        assert not has_isolated_vertex(m)
        assert parse(serialize(m)) == m


def test_bad_configs():
    with pytest.raises(ValueError):
        GenConfig("circular", 2, 0)
    with pytest.raises(ValueError):
        GenConfig("interval", 1, 0)
    with pytest.raises(ValueError):
        GenConfig("tree", 5, 0)


def test_gen_exhausted(monkeypatch):
    import pairdom.instances as inst

    monkeypatch.setattr(inst, "has_isolated_vertex", lambda m: True)
    with pytest.raises(GenExhausted):
        inst.generate(GenConfig("interval", 3, 0, FORBID))
    assert inst.generate(GenConfig("interval", 3, 0, ALLOW)).n == 3


def test_normalize_examples():
    assert normalize([(0.5, 2.5), (1.0, 9.0)], "interval").pairs() == [(1, 3), (2, 4)]
    assert normalize([(10, 30), (20, 50), (40, 70), (60, 80)], "interval") == P4I
    with pytest.raises(MalformedModel):
        normalize([(3.0, 3.0), (1.0, 2.0)], "interval")


def test_normalize_circular_rotates_first_head_to_one():
    m = normalize([(0.2, 0.9), (0.5, 0.1), (0.7, 0.4)], "circular")
    assert m.pairs() == [(1, 5), (3, 6), (4, 2)]
    assert m.head[0] == 1


def test_normalize_is_invariant_under_monotone_maps():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(2, 20)
        xs = rng.sample(range(10_000), 2 * n)
        raw = [tuple(sorted(xs[i : i + 2])) for i in range(0, 2 * n, 2)]
        warped = [(a**3 + 7.5, b**3 + 7.5) for a, b in raw]
        assert normalize(raw, "interval") == normalize(warped, "interval")


def test_parse_serialize_round_trip():
    text = "interval 2\n1 1 3\n2 2 4\n"
    assert serialize(parse(text)) == text
    assert parse("circular 3\n1 1 4\n2 3 6\n3 5 2\n") == TRI
    for name in ("fig1.interval", "fig2.circular", "p4.interval", "tri.circular"):
        m = fixture(name)
        assert parse(serialize(m)) == m


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("graph 2\n", 1),
        ("interval x\n", 1),
        ("interval 2\n1 1 3\n", 3),
        ("interval 2\n1 1 3\n2 2\n", 3),
        ("interval 2\n1 1 3\n3 2 4\n", 3),
        ("interval 2\n1 1 a\n2 2 4\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line


def test_parse_validates():
    with pytest.raises(MalformedModel):
        parse("interval 1\n1 1 2\n")
