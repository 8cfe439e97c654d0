"""Intersection models for interval and circular-arc graphs.

Vertices are addressed by 0-based indices into the model's canonical
ordering; vertex ``i`` is displayed as ``v{i+1}``.  Endpoint labels are the
integers ``1..2n``.  ``NONE`` (-1) marks an undefined vertex reference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedModel

NONE = -1


def vertex_name(v: int) -> str:
    return f"v{v + 1}"


def _check_labels(pairs, n):
    flat = [x for p in pairs for x in p]
    # fast path in C; the loop below only runs to name the offending label
    if set(map(type, flat)) <= {int} and min(flat) >= 1 and max(flat) <= 2 * n and len(set(flat)) == 2 * n:
        return
    seen = bytearray(2 * n + 1)
    for a, b in pairs:
        for x in (a, b):
            if not isinstance(x, int) or isinstance(x, bool):
                raise MalformedModel(f"endpoint {x!r} is not an integer")
            if not 1 <= x <= 2 * n:
                raise MalformedModel(f"label {x} outside 1..{2 * n}")
            if seen[x]:
                raise MalformedModel(f"duplicate label {x}")
            seen[x] = 1


def _order_by_first(pairs, n):
    # labels are a permutation of 1..2n, so a bucket pass replaces the sort
    other = [0] * (2 * n + 1)
    for a, b in pairs:
        other[a] = b
    firsts = [a for a, b in enumerate(other) if b]
    return tuple(firsts), tuple([other[a] for a in firsts])


@dataclass(frozen=True)
class IntervalModel:
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.left)

    def pairs(self):
        return list(zip(self.left, self.right))

    def intersect(self, u: int, v: int) -> bool:
        return self.left[u] < self.right[v] and self.left[v] < self.right[u]


@dataclass(frozen=True)
class ArcModel:
    head: tuple[int, ...]
    tail: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.head)

    @property
    def m(self) -> int:
        """Number of endpoint labels on the circle."""
        return 2 * len(self.head)

    def pairs(self):
        return list(zip(self.head, self.tail))

    def length(self, v: int) -> int:
        """Clockwise distance from head to tail."""
        return (self.tail[v] - self.head[v]) % self.m

    def contains(self, v: int, x: int) -> bool:
        return point_in_arc(x, v, self)

    def intersect(self, u: int, v: int) -> bool:
        return arcs_intersect(u, v, self)


def validate_interval_model(raw) -> IntervalModel:
    """Check ``raw`` (a sequence of ``(left, right)`` labels) and renumber it
    into left-endpoint order."""
    pairs = [tuple(p) for p in raw]
    n = len(pairs)
    if n < 2:
        raise MalformedModel(f"an interval model needs at least 2 intervals, got {n}")
    for p in pairs:
        if len(p) != 2:
            raise MalformedModel(f"interval {p!r} does not have two endpoints")
    _check_labels(pairs, n)
    for a, b in pairs:
        if a >= b:
            raise MalformedModel(f"interval ({a},{b}) has left >= right")
    return IntervalModel(*_order_by_first(pairs, n))


def validate_arc_model(raw) -> ArcModel:
    """Check ``raw`` (a sequence of ``(head, tail)`` labels) and renumber it so
    that the arc with head 1 comes first and heads ascend clockwise."""
    pairs = [tuple(p) for p in raw]
    n = len(pairs)
    if n < 3:
        raise MalformedModel(f"an arc model needs at least 3 arcs, got {n}")
    for p in pairs:
        if len(p) != 2:
            raise MalformedModel(f"arc {p!r} does not have two endpoints")
    _check_labels(pairs, n)
    m = 2 * n
    if not any(h == 1 for h, _ in pairs):
        raise MalformedModel("label 1 must be the head of some arc")
    for h, t in pairs:
        if (t - h) % m == m - 1:
            raise MalformedModel(f"arc ({h},{t}) covers the whole circle")
    return ArcModel(*_order_by_first(pairs, n))


def point_in_arc(x: int, v: int, model: ArcModel) -> bool:
    """True iff label ``x`` lies on the clockwise walk from head(v) to tail(v)."""
    h, t = model.head[v], model.tail[v]
    if h <= t:
        return h <= x <= t
    return x >= h or x <= t


def arcs_intersect(u: int, v: int, model: ArcModel) -> bool:
    return point_in_arc(model.head[u], v, model) or point_in_arc(model.head[v], u, model)


@dataclass(frozen=True)
class AdjacencyView:
    neighbors: tuple[frozenset, ...]

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def closed(self, v: int) -> frozenset:
        return self.neighbors[v] | {v}

    def edges(self):
        for u, nb in enumerate(self.neighbors):
            for v in nb:
                if u < v:
                    yield u, v


def adjacency(model) -> AdjacencyView:
    """Materialize neighbor sets.  For tests and the oracle only."""
    n = model.n
    nb = [set() for _ in range(n)]
    if isinstance(model, IntervalModel):
        # left-endpoint sweep: a new interval meets every still-open one
        events = sorted([(model.left[v], v) for v in range(n)] + [(model.right[v], v) for v in range(n)])
        active = set()
        for x, v in events:
            if x == model.left[v]:
                for u in active:
                    nb[u].add(v)
                    nb[v].add(u)
                active.add(v)
            else:
                active.discard(v)
    else:
        for u in range(n):
            for v in range(u + 1, n):
                if arcs_intersect(u, v, model):
                    nb[u].add(v)
                    nb[v].add(u)
    return AdjacencyView(tuple(frozenset(s) for s in nb))


def lift_to_arcs(model: IntervalModel) -> ArcModel:
    """View an interval model as an arc model on the same labels."""
    if model.n < 3:
        raise MalformedModel("an arc model needs at least 3 arcs")
    return validate_arc_model(model.pairs())
