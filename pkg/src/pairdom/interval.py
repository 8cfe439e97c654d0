"""Greedy minimum paired domination on interval graphs.

The solver repeatedly takes the next undominated vertex ``v`` (the one whose
interval ends first among intervals meeting no chosen interval) and adds the
pair ``(p(v), p(p(v)))``, where ``p(v)`` is the neighbor of ``v`` reaching
farthest to the right.  Every lookup is answered from tables built by
left-to-right sweeps over the ``2n`` endpoints.

``compute_tables`` builds the full p, f, c and next tables.  The solver
itself uses ``SweepIndex``: prefix and suffix arrays whose sweeps walk
memory in order, so only the handful of vertices the greedy visits cost a
scattered lookup.  Both give the same answers.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from itertools import accumulate

from . import _debug
from .errors import PartnerUndefined
from .model import NONE, IntervalModel


@dataclass(frozen=True)
class PairSet:
    """Matched pairs in insertion order, smaller vertex first in each pair."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple((min(a, b), max(a, b)) for a, b in pairs))

    @property
    def vertices(self) -> frozenset:
        return frozenset(x for pair in self.pairs for x in pair)

    def __len__(self):
        return 2 * len(self.pairs)


@dataclass(frozen=True)
class IntervalTables:
    p: list
    f: list
    c: list
    next: list


def _endpoint_owners(model: IntervalModel):
    """owner[x] is the vertex with an endpoint at label x; is_left[x] tells which end."""
    m = 2 * model.n
    owner = [NONE] * (m + 1)
    is_left = [False] * (m + 1)
    for v in range(model.n):
        owner[model.left[v]] = v
        is_left[model.left[v]] = True
        owner[model.right[v]] = v
    return owner, is_left


def compute_partner_table(model: IntervalModel, _owners=None) -> list:
    """p[v] = neighbor of v with the rightmost right endpoint, or NONE.

    Keeps the two intervals with the largest right endpoints among those
    already opened.  The runner-up answers for an interval that is itself
    the current rightmost one (it may still contain shorter neighbors).
    """
    owner, is_left = _owners or _endpoint_owners(model)
    right, left = model.right, model.left
    p = [NONE] * model.n
    best = second = NONE
    for x in range(1, 2 * model.n + 1):
        v = owner[x]
        if is_left[x]:
            if best == NONE or right[v] > right[best]:
                best, second = v, best
            elif second == NONE or right[v] > right[second]:
                second = v
        elif best != v:
            p[v] = best
        elif second != NONE and right[second] > left[v]:
            p[v] = second
    return p


def compute_f_table(model: IntervalModel, _owners=None) -> list:
    """f[v] = vertex owning the first left endpoint after r(v), or NONE."""
    owner, is_left = _owners or _endpoint_owners(model)
    f = [NONE] * model.n
    pending = []
    for x in range(1, 2 * model.n + 1):
        v = owner[x]
        if is_left[x]:
            for u in pending:
                f[u] = v
            pending.clear()
        else:
            pending.append(v)
    return f


def compute_c_table(model: IntervalModel, _owners=None) -> list:
    """c[v] = owner of the first right endpoint from l(v) whose index is >= v."""
    owner, is_left = _owners or _endpoint_owners(model)
    c = [NONE] * model.n
    queue = deque()
    for x in range(1, 2 * model.n + 1):
        v = owner[x]
        if is_left[x]:
            queue.append(v)
        else:
            # left endpoints arrive in index order, so the queue is sorted
            while queue and queue[0] <= v:
                c[queue.popleft()] = v
    return c


def compute_tables(model: IntervalModel) -> IntervalTables:
    owners = _endpoint_owners(model)
    p = compute_partner_table(model, owners)
    f = compute_f_table(model, owners)
    c = compute_c_table(model, owners)
    nxt = [NONE if fv == NONE else c[fv] for fv in f]
    return IntervalTables(p, f, c, nxt)


def next_vertex(tables: IntervalTables, v: int) -> int:
    fv = tables.f[v]
    return NONE if fv == NONE else tables.c[fv]


class SweepIndex:
    """O(1) p, f, c and next queries from prefix/suffix arrays.

    Vertices are numbered in left-endpoint order, so the intervals opened
    before label x are exactly ``0..lefts[x]-1``.
    """

    __slots__ = ("model", "lefts", "top", "second", "low")

    def __init__(self, model: IntervalModel):
        n, left = model.n, model.left
        right = array("l", model.right)  # one packed copy for the two sweeps below
        self.model = model
        is_left = bytearray(2 * n + 1)
        for x in left:
            is_left[x] = 1
        self.lefts = list(accumulate(is_left))
        # top[k], second[k]: the two largest right endpoints among vertices < k
        top = [NONE] * (n + 1)
        second = [NONE] * (n + 1)
        b = s = NONE
        rb = rs = 0
        for v in range(n):
            r = right[v]
            if r > rb:
                b, s, rb, rs = v, b, r, rb
            elif r > rs:
                s, rs = v, r
            top[v + 1] = b
            second[v + 1] = s
        self.top, self.second = top, second
        # low[v]: the vertex u >= v with the smallest right endpoint
        low = [NONE] * n
        best, rbest = NONE, 2 * n + 1
        for v in range(n - 1, -1, -1):
            if right[v] < rbest:
                best, rbest = v, right[v]
            low[v] = best
        self.low = low

    def p(self, v):
        m = self.model
        k = self.lefts[m.right[v]]
        u = self.top[k]
        if u == v:
            u = self.second[k]
        if u == NONE or (u < v and m.right[u] < m.left[v]):
            return NONE
        return u

    def f(self, v):
        k = self.lefts[self.model.right[v]]
        return k if k < self.model.n else NONE

    def c(self, v):
        return self.low[v]

    def next(self, v):
        fv = self.f(v)
        return NONE if fv == NONE else self.low[fv]


def _first_undominated_direct(model, chosen):
    """Definition-direct scan used by the debug cross-check."""
    best = NONE
    for u in range(model.n):
        if u in chosen or any(model.intersect(u, s) for s in chosen):
            continue
        if best == NONE or model.right[u] < model.right[best]:
            best = u
    return best


def solve_interval(model: IntervalModel, tables: IntervalTables | None = None, *, debug=None) -> PairSet:
    """Minimum paired-dominating set of an interval model.

    Raises Infeasible when some vertex is isolated.
    """
    debug = _debug.enabled(debug)
    if tables is None:
        idx = SweepIndex(model)
        partner, step, first = idx.p, idx.next, idx.low[0]
    else:
        partner, step, first = tables.p.__getitem__, tables.next.__getitem__, tables.c[0]
    right = model.right
    chosen = set()
    pairs = []
    v = first  # smallest right endpoint overall
    while v != NONE:
        if debug:
            assert v == _first_undominated_direct(model, chosen), "next-undominated mismatch"
        a = partner(v)
        if a == NONE:
            raise PartnerUndefined(v)
        b = partner(a)
        if a in chosen or b in chosen:
            raise AssertionError(f"pair ({a},{b}) overlaps the chosen set")
        chosen.add(a)
        chosen.add(b)
        pairs.append((a, b))
        z = a if right[a] > right[b] else b
        v = step(z)
    if debug:
        assert _first_undominated_direct(model, chosen) == NONE
    return PairSet.from_pairs(pairs)


__all__ = [
    "IntervalTables",
    "PairSet",
    "SweepIndex",
    "compute_c_table",
    "compute_f_table",
    "compute_partner_table",
    "compute_tables",
    "next_vertex",
    "solve_interval",
]
