"""Random instances, coordinate normalization, and the model text format.

Text format::

    interval <n>            (or: circular <n>)
    <id> <endpoint1> <endpoint2>
    ...

with ids 1..n in canonical order and endpoints (left, right) or (head, tail).
"""

from __future__ import annotations

import random
from itertools import islice
from operator import eq
from dataclasses import dataclass

from .errors import GenExhausted, MalformedModel, ParseError
from .model import ArcModel, IntervalModel, validate_arc_model, validate_interval_model

INTERVAL = "interval"
CIRCULAR = "circular"
FORBID = "forbid"
ALLOW = "allow"

MIN_N = {INTERVAL: 2, CIRCULAR: 3}
MAX_REJECTIONS = 1000


@dataclass(frozen=True)
class GenConfig:
    kind: str
    n: int
    seed: int
    isolation_policy: str = FORBID

    def __post_init__(self):
        if self.kind not in MIN_N:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.n < MIN_N[self.kind]:
            raise ValueError(f"{self.kind} models need n >= {MIN_N[self.kind]}")
        if self.isolation_policy not in (FORBID, ALLOW):
            raise ValueError(f"unknown isolation policy {self.isolation_policy!r}")


def has_isolated_vertex(model) -> bool:
    # partner tables are NONE exactly at isolated vertices
    if isinstance(model, IntervalModel):
        from .interval import compute_partner_table

        return -1 in compute_partner_table(model)
    from .circular import _tail_partners

    return -1 in _tail_partners(model.head, model.tail, model.m)[0]


def _draw(kind, n, rng):
    labels = list(range(1, 2 * n + 1))
    rng.shuffle(labels)
    if kind == INTERVAL:
        return validate_interval_model(
            [(min(labels[i], labels[i + 1]), max(labels[i], labels[i + 1])) for i in range(0, 2 * n, 2)]
        )
    m = 2 * n
    arcs = []
    for i in range(0, m, 2):
        lo, hi = sorted(labels[i : i + 2])
        h, t = (lo, hi) if rng.random() < 0.5 else (hi, lo)
        if (t - h) % m == m - 1:
            return None
        arcs.append((h, t))
    # rotate so a randomly chosen head lands on label 1
    h0 = arcs[rng.randrange(n)][0]
    return validate_arc_model([((h - h0) % m + 1, (t - h0) % m + 1) for h, t in arcs])


def generate(config: GenConfig):
    """Deterministic random model: a uniform pairing of the labels 1..2n."""
    rng = random.Random(config.seed)
    for _ in range(MAX_REJECTIONS):
        model = _draw(config.kind, config.n, rng)
        if model is None:
            continue
        if config.isolation_policy == FORBID and has_isolated_vertex(model):
            continue
        return model
    raise GenExhausted(f"no valid {config.kind} model after {MAX_REJECTIONS} draws")


def normalize(raw, kind):
    """Rank arbitrary distinct coordinates into labels 1..2n and validate.

    For circular models coordinates increase clockwise; labels are rotated
    so the first head met clockwise from the smallest coordinate gets 1.
    """
    pairs = [tuple(p) for p in raw]
    coords = [x for p in pairs for x in p]
    order = sorted(range(len(coords)), key=coords.__getitem__)
    ranked = [coords[i] for i in order]
    if any(map(eq, ranked, islice(ranked, 1, None))):
        dup = next(a for a, b in zip(ranked, ranked[1:]) if a == b)
        raise MalformedModel(f"duplicate coordinate {dup!r}")
    rank = [0] * len(coords)
    for r, i in enumerate(order, 1):
        rank[i] = r
    labelled = list(zip(rank[0::2], rank[1::2]))
    if kind == INTERVAL:
        return validate_interval_model(labelled)
    if kind != CIRCULAR:
        raise ValueError(f"unknown kind {kind!r}")
    m = len(coords)
    if not labelled:
        return validate_arc_model(labelled)
    h0 = min(h for h, _ in labelled)
    return validate_arc_model([((h - h0) % m + 1, (t - h0) % m + 1) for h, t in labelled])


def serialize(model) -> str:
    kind = INTERVAL if isinstance(model, IntervalModel) else CIRCULAR
    lines = [f"{kind} {model.n}"]
    lines += [f"{i} {a} {b}" for i, (a, b) in enumerate(model.pairs(), 1)]
    return "\n".join(lines) + "\n"


def _int(tok, line):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {tok!r}") from None


def parse(text: str):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(1, "empty input")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in (INTERVAL, CIRCULAR):
        raise ParseError(1, "expected 'interval <n>' or 'circular <n>'")
    kind, n = head[0], _int(head[1], 1)
    if n < 0:
        raise ParseError(1, "negative vertex count")
    if len(lines) - 1 != n:
        raise ParseError(min(len(lines), n + 1) + 1, f"expected {n} vertex lines, got {len(lines) - 1}")
    raw = []
    for lineno, line in enumerate(lines[1:], 2):
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(lineno, "expected '<id> <endpoint> <endpoint>'")
        vid, a, b = (_int(t, lineno) for t in toks)
        if vid != lineno - 1:
            raise ParseError(lineno, f"expected vertex id {lineno - 1}, got {vid}")
        raw.append((a, b))
    if kind == INTERVAL:
        return validate_interval_model(raw)
    return validate_arc_model(raw)


def read_model(path):
    with open(path, encoding="ascii") as fh:
        return parse(fh.read())


def write_model(model, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize(model))


__all__ = [
    "ALLOW",
    "CIRCULAR",
    "FORBID",
    "INTERVAL",
    "ArcModel",
    "GenConfig",
    "IntervalModel",
    "generate",
    "has_isolated_vertex",
    "normalize",
    "parse",
    "read_model",
    "serialize",
    "write_model",
]
