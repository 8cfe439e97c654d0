"""Minimum paired domination on circular-arc graphs.

Arcs run clockwise from head to tail over the labels ``1..m`` (``m = 2n``).
Positions that may run past ``m`` are "unrolled": label ``x`` appears at
``x``, ``x + m``, ``x + 2m``...  A coverage segment is a pair of unrolled
positions ``cs <= ce`` with ``ce - cs < m - 1``; an arc is undominated by it
exactly when the arc fits strictly inside the gap ``(ce, cs + m)``.

For every maximal arc ``w`` adjacent to ``v1`` the solver grows two greedy
solutions, one seeded with ``{w, p_t(w)}`` and one with ``{w, p_h(w)}``, and
keeps the smallest.  ``solve_circular_naive`` follows the greedy loop
literally.  ``solve_circular_fast`` shares the chains between candidates
through the successor forest and finishes each one with a few extra pairs
found by direct queries (one on typical inputs, three on the worst model we
know of).
"""

from __future__ import annotations

import time
from bisect import bisect_right
from dataclasses import dataclass, field

from . import _debug
from .errors import ForestViolation, Infeasible, PartnerUndefined
from .interval import PairSet
from .model import NONE, ArcModel, point_in_arc

TAIL = "tail"
HEAD = "head"

_INF = float("inf")


@dataclass(frozen=True)
class ArcTables:
    p_t: list
    p_h: list
    maximal: list
    near_v1: list
    # inside_tail[x]: smallest unrolled tail over arc copies with head > x
    inside_tail: list
    inside_arc: list


@dataclass(frozen=True)
class CandidateSet:
    W: tuple


@dataclass
class SuccessorForest:
    """Functional digraph on the nodes ``(v, p_t(v))``, one per vertex.

    ``under[v]`` is the first arc the pair misses and ``target[v]`` its tail
    partner, the first member of the successor node (NONE when the pair
    already dominates everything).  ``parent[v]`` keeps the target only when
    both members of the successor pair avoid N[v1].
    """

    under: list
    target: list
    parent: list
    children: list
    pathlen: list
    root: list
    span_start: list
    span_len: list  # -1 when the pair covers the whole circle

    @property
    def n(self):
        return len(self.parent)

    def node(self, v, tables):
        return (v, tables.p_t[v])

    def edges(self):
        return [(v, u) for v, u in enumerate(self.parent) if u != NONE]

    def path(self, v):
        out = [v]
        while self.parent[v] != NONE:
            v = self.parent[v]
            out.append(v)
        return out


@dataclass
class CandidateSolution:
    candidate: int
    side: str
    size: int | None  # None: infeasible from this seed
    pairs: PairSet | None = None
    path_pairs: int | None = None
    aug_pairs: int | None = None
    # internals needed to rebuild the pair list of a fast solution
    _entry: int = NONE
    _aug: tuple = ()
    _last: int = NONE

    @property
    def feasible(self):
        return self.size is not None


@dataclass
class SolveReport:
    kind: str
    algo: str
    pairs: PairSet
    candidates: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def size(self):
        return len(self.pairs)


# ---------------------------------------------------------------- tables


def _tail_partners(head, tail, m):
    """Tail partners and maximality for arcs given by (head, tail) label lists.

    Sweeps two laps of the circle, keeping the arc copy whose unrolled tail
    reaches farthest among copies already opened.
    """
    n = len(head)
    kind = [0] * (m + 1)  # +1 head, -1 tail
    owner = [NONE] * (m + 1)
    unrolled = [0] * n
    for v in range(n):
        kind[head[v]] = 1
        owner[head[v]] = v
        kind[tail[v]] = -1
        owner[tail[v]] = v
        unrolled[v] = tail[v] if tail[v] > head[v] else tail[v] + m

    p = [NONE] * n
    maximal = [True] * n
    best_tail = 0
    best_arc = NONE
    last_tail = 0
    last_arc = NONE
    for y in range(1, 2 * m + 1):
        x = y - m if y > m else y
        v = owner[x]
        if kind[x] == 1:
            copy_tail = unrolled[v] if y <= m else unrolled[v] + m
            if y > m and best_tail > copy_tail:
                maximal[v] = False  # an earlier arc covers all of a(v)
            if copy_tail > best_tail:
                best_tail, best_arc = copy_tail, v
        else:
            if y > m:
                if best_tail > y:
                    p[v] = best_arc
                elif last_arc != NONE and y - last_tail < (tail[v] - head[v]) % m:
                    # nothing contains t(v): the neighbor ending last inside a(v)
                    p[v] = last_arc
            last_tail, last_arc = y, v
    return p, maximal


def compute_arc_partners(model: ArcModel) -> ArcTables:
    n, m = model.n, model.m
    head, tail = model.head, model.tail
    p_t, maximal = _tail_partners(head, tail, m)
    # head partners are tail partners of the mirrored circle x -> m + 1 - x
    p_h, _ = _tail_partners([m + 1 - t for t in tail], [m + 1 - h for h in head], m)
    near = [model.intersect(v, 0) for v in range(n)]
    near[0] = True

    size = 2 * m + 2
    starts = [NONE] * size
    for v in range(n):
        starts[head[v]] = v
        starts[head[v] + m] = v
    inside_tail = [_INF] * size
    inside_arc = [NONE] * size
    cur_tail, cur_arc = _INF, NONE
    for y in range(2 * m, 0, -1):
        v = starts[y]
        if v != NONE:
            t = tail[v] if tail[v] > head[v] else tail[v] + m
            if y > m:
                t += m
            if t < cur_tail:
                cur_tail, cur_arc = t, v
        inside_tail[y - 1] = cur_tail
        inside_arc[y - 1] = cur_arc
    return ArcTables(p_t, p_h, maximal, near, inside_tail, inside_arc)


def compute_candidate_set(model: ArcModel, tables: ArcTables) -> CandidateSet:
    """Maximal arcs of N[v1], starting from the one whose head lies farthest
    counterclockwise from h(v1) and continuing clockwise."""
    w = [v for v in range(1, model.n) if tables.maximal[v] and tables.near_v1[v]]
    if tables.maximal[0]:
        w.append(0)
    return CandidateSet(tuple(w))


# ---------------------------------------------------------------- coverage


def pair_span(model: ArcModel, a: int, b: int):
    """(start label, clockwise length) of a(a) | a(b), or None if it is the circle."""
    m = model.m
    ha, hb = model.head[a], model.head[b]
    la, lb = model.length(a), model.length(b)
    if point_in_arc(hb, a, model):
        start, length = ha, max(la, (hb - ha) % m + lb)
    elif point_in_arc(ha, b, model):
        start, length = hb, max(lb, (ha - hb) % m + la)
    else:
        raise AssertionError(f"pair members v{a + 1}, v{b + 1} do not intersect")
    if length >= m - 1:
        return None
    return start, length


class _Coverage:
    __slots__ = ("m", "cs", "ce", "full")

    def __init__(self, model, a, b):
        self.m = model.m
        self.full = False
        span = pair_span(model, a, b)
        if span is None:
            self.full = True
            self.cs = self.ce = 0
        else:
            self.cs, self.ce = span[0], span[0] + span[1]

    def absorb(self, span, label, pos):
        """Merge a span that contains ``label``, placed at unrolled ``pos``."""
        if self.full:
            return
        if span is None:
            self.full = True
            return
        start = pos - (label - span[0]) % self.m
        if start < self.cs:
            self.cs = start
        if start + span[1] > self.ce:
            self.ce = start + span[1]
        if self.ce - self.cs >= self.m - 1:
            self.full = True

    def place(self, span):
        """Merge a span known to start inside [cs, cs + m)."""
        if self.full:
            return
        if span is None:
            self.full = True
            return
        start = self.cs + (span[0] - self.cs) % self.m
        if start + span[1] > self.ce:
            self.ce = start + span[1]
        if self.ce - self.cs >= self.m - 1:
            self.full = True

    def undominated(self, model, v):
        """True iff a(v) fits strictly inside the gap (ce, cs + m)."""
        if self.full:
            return False
        h = self.ce + (model.head[v] - self.ce) % self.m
        return h + model.length(v) < self.cs + self.m


def _first_inside(tables, m, ce, gap_end):
    """Arc with the first tail among arcs strictly inside (ce, gap_end).

    Returns (arc, unrolled tail) or None.
    """
    x = (ce - 1) % m + 1
    shift = ce - x
    t = tables.inside_tail[x]
    if t < gap_end - shift:
        return tables.inside_arc[x], t + shift
    return None


def _next_undominated(tables, cov):
    if cov.full:
        return None
    return _first_inside(tables, cov.m, cov.ce, cov.cs + cov.m)


# ---------------------------------------------------------------- successor forest


def _succ_under(model, tables, v, span=None):
    """First arc clockwise beyond the node (v, p_t(v)) that the pair misses."""
    if span is None:
        span = pair_span(model, v, tables.p_t[v])
    if span is None:
        return NONE
    found = _first_inside(tables, model.m, span[0] + span[1], span[0] + model.m)
    return NONE if found is None else found[0]


def _succ_vertex(model, tables, v, span=None):
    p = tables.p_t
    u = _succ_under(model, tables, v, span)
    if u == NONE:
        return NONE
    if p[u] == NONE:
        raise PartnerUndefined(u)
    if p[p[u]] == NONE:
        raise PartnerUndefined(p[u])
    return p[u]


def succ(model: ArcModel, tables: ArcTables, pair):
    """Successor of the node ``(v, p_t(v))``: the pair (p(u), p(p(u))) for the
    first arc u clockwise beyond the node's coverage, or None."""
    v = pair[0]
    if tables.p_t[v] == NONE:
        raise PartnerUndefined(v)
    x = _succ_vertex(model, tables, v)
    return None if x == NONE else (x, tables.p_t[x])


def build_successor_forest(model: ArcModel, tables: ArcTables) -> SuccessorForest:
    n = model.n
    p, near = tables.p_t, tables.near_v1
    under = [NONE] * n
    target = [NONE] * n
    parent = [NONE] * n
    span_start = [0] * n
    span_len = [-1] * n
    children = [[] for _ in range(n)]
    for v in range(n):
        if p[v] == NONE:
            raise PartnerUndefined(v)
        span = pair_span(model, v, p[v])
        if span is not None:
            span_start[v], span_len[v] = span
        u = _succ_under(model, tables, v, span)
        if u != NONE:
            if p[u] == NONE:
                raise PartnerUndefined(u)
            if p[p[u]] == NONE:
                raise PartnerUndefined(p[u])
        x = NONE if u == NONE else p[u]
        under[v] = u
        target[v] = x
        if x != NONE and not near[x] and not near[p[x]]:
            parent[v] = x
            children[x].append(v)

    # walk reversed edges from the path ends; anything unreached sits on a cycle
    pathlen = [0] * n
    root = [NONE] * n
    stack = [v for v in range(n) if parent[v] == NONE]
    for r in stack:
        pathlen[r] = 1
        root[r] = r
    seen = len(stack)
    while stack:
        v = stack.pop()
        for c in children[v]:
            pathlen[c] = pathlen[v] + 1
            root[c] = root[v]
            stack.append(c)
            seen += 1
    if seen != n:
        bad = next(v for v in range(n) if root[v] == NONE)
        raise ForestViolation(f"successor digraph has a cycle through v{bad + 1}")
    return SuccessorForest(under, target, parent, children, pathlen, root, span_start, span_len)


# ---------------------------------------------------------------- naive solver


def _seed_partner(tables, w, side):
    return tables.p_t[w] if side == TAIL else tables.p_h[w]


def solve_candidate_naive(model: ArcModel, tables: ArcTables, w: int, side: str, *, debug=None) -> CandidateSolution:
    """Grow the greedy solution seeded with w and its tail (or head) partner,
    scanning every arc at each step."""
    debug = _debug.enabled(debug)
    n, m = model.n, model.m
    p = tables.p_t
    x = _seed_partner(tables, w, side)
    if x == NONE:
        return CandidateSolution(w, side, None)
    pairs = [(w, x)]
    chosen = {w, x}
    dominated = [False] * n

    def mark(s):
        for v in range(n):
            if not dominated[v] and model.intersect(v, s):
                dominated[v] = True
        dominated[s] = True

    mark(w)
    mark(x)
    t1 = model.tail[0]
    # the segment view is exact once t(v1) is covered (always so for TAIL)
    cov = _Coverage(model, w, x) if debug else None
    if cov is not None and not (point_in_arc(t1, w, model) or point_in_arc(t1, x, model)):
        cov = None

    while True:
        if cov is not None:
            for v in range(n):
                assert dominated[v] == (not cov.undominated(model, v)), "coverage segment disagrees"
        best = NONE
        best_key = m
        for v in range(n):
            if not dominated[v]:
                key = (model.tail[v] - t1) % m
                if key < best_key:
                    best, best_key = v, key
        if best == NONE:
            break
        v = best
        if p[v] == NONE or p[p[v]] == NONE:
            return CandidateSolution(w, side, None)
        if p[p[v]] in chosen:
            a, b = v, p[v]
        else:
            a, b = p[v], p[p[v]]
        if a in chosen or b in chosen:
            raise AssertionError(f"pair (v{a + 1}, v{b + 1}) overlaps the chosen set")
        pairs.append((a, b))
        chosen.update((a, b))
        mark(a)
        mark(b)
        if cov is not None:
            pos = cov.ce + (model.tail[v] - cov.ce) % m
            cov.absorb(pair_span(model, a, b), model.tail[v], pos)
    return CandidateSolution(w, side, 2 * len(pairs), PairSet.from_pairs(pairs))


def _pick(cands):
    """Best candidate: per seed TAIL wins ties, across seeds the first wins."""
    best = None
    for t, h in cands:
        s = t if t.feasible and (not h.feasible or t.size <= h.size) else h
        if s.feasible and (best is None or s.size < best.size):
            best = s
    return best


def solve_circular_naive(model: ArcModel, *, debug=None) -> PairSet:
    tables = compute_arc_partners(model)
    cands = []
    for w in compute_candidate_set(model, tables).W:
        cands.append(
            (
                solve_candidate_naive(model, tables, w, TAIL, debug=debug),
                solve_candidate_naive(model, tables, w, HEAD, debug=debug),
            )
        )
    best = _pick(cands)
    if best is None:
        raise Infeasible("no candidate seed yields a paired-dominating set")
    return best.pairs


# ---------------------------------------------------------------- fast solver


def _node_span(forest, z):
    if forest.span_len[z] < 0:
        return None
    return forest.span_start[z], forest.span_len[z]


@dataclass
class _Start:
    cov: _Coverage
    chosen: set
    entry: int
    path_pairs: int


def _start(model, tables, forest, w, side):
    """Seed a candidate and find the forest node its chain enters."""
    p = tables.p_t
    x = _seed_partner(tables, w, side)
    cov = _Coverage(model, w, x)
    chosen = {w, x}
    if side == TAIL:
        return _Start(cov, chosen, w, forest.pathlen[w])
    # the head seed is not a forest node: take one greedy step by hand
    found = _next_undominated(tables, cov)
    if found is None:
        return _Start(cov, chosen, NONE, 1)
    u, pos = found
    entry = u if p[p[u]] in chosen else p[u]
    cov.absorb(_node_span(forest, entry), model.tail[u], pos)
    chosen.update((entry, p[entry]))
    return _Start(cov, chosen, entry, 1 + forest.pathlen[entry])


def _path_stops(model, forest, p, queries):
    """Where each candidate must leave its forest path.

    ``queries`` maps an entry node to ``(key, held, room)`` items: ``held``
    are the vertices the candidate already holds and ``room`` is how far
    past the entry's clockwise end its uncovered gap reaches.  Following the
    path from node y is the greedy step only while the arc y misses ends
    inside that gap and the successor pair avoids ``held``.  For each key the
    answer is the last node to keep (NONE: the whole path is good).

    One pass over the reversed forest.  ``reach[v]`` places the tail of the
    arc v misses in unrolled coordinates where the tree's root ends at 0;
    it grows strictly towards the root, so the first bad step is found by
    bisection on the current root path.  ``active[x]`` holds the ancestors
    whose tail partner is x, deepest last.
    """
    out = {}
    if not queries:
        return out
    m = model.m
    tail = model.tail
    pathlen, children, parent, under = forest.pathlen, forest.children, forest.parent, forest.under
    end = [NONE if forest.span_len[v] < 0 else (forest.span_start[v] + forest.span_len[v] - 1) % m + 1 for v in range(forest.n)]
    depth_end = [0] * forest.n  # unrolled end of each node's pair
    active = {}
    trail = []
    neg_reach = []
    stack = [(r, False) for r in range(forest.n) if parent[r] == NONE]
    while stack:
        v, done = stack.pop()
        if done:
            trail.pop()
            neg_reach.pop()
            active[p[v]].pop()
            continue
        par = parent[v]
        if par != NONE:
            depth_end[v] = depth_end[par] - (end[par] - end[v]) % m
        if under[v] == NONE or end[v] == NONE:
            reach = _INF
        else:
            reach = depth_end[v] + (tail[under[v]] - end[v]) % m
        for key, held, room in queries.get(v, ()):
            limit = depth_end[v] + room
            if reach >= limit:
                stop = v
            else:
                i = bisect_right(neg_reach, -limit) - 1
                stop = trail[i] if i >= 0 else NONE
            z = NONE
            for x in held:
                lst = active.get(x)
                if lst and (z == NONE or pathlen[lst[-1]] > pathlen[z]):
                    z = lst[-1]
            if z != NONE:
                # keep the node whose step would land on z; trail[i] has pathlen i + 1
                before = trail[pathlen[z]] if pathlen[z] < len(trail) else v
                if stop == NONE or pathlen[before] > pathlen[stop]:
                    stop = before
            out[key] = stop
        trail.append(v)
        neg_reach.append(-reach)
        active.setdefault(p[v], []).append(v)
        stack.append((v, True))
        stack.extend((c, False) for c in children[v])
    return out


def _finish(model, tables, forest, w, side, st, stop):
    p = tables.p_t
    cov, chosen, entry = st.cov, st.chosen, st.entry
    path_pairs = st.path_pairs
    last = NONE
    if entry != NONE:
        last = forest.root[entry] if stop == NONE else stop
        path_pairs -= forest.pathlen[last] - 1
        if last != entry:
            cov.place(_node_span(forest, last))
            chosen.update((last, p[last]))

    aug = []
    while True:
        found = _next_undominated(tables, cov)
        if found is None:
            break
        u, pos = found
        a = u if p[p[u]] in chosen else p[u]
        cov.absorb(_node_span(forest, a), model.tail[u], pos)
        chosen.update((a, p[a]))
        aug.append(a)
        if len(aug) > model.n:
            raise AssertionError("augmentation does not terminate")
    size = 2 * (path_pairs + len(aug))
    return CandidateSolution(w, side, size, None, path_pairs, len(aug), entry, tuple(aug), last)


def _fast_candidates(model, tables, forest, W):
    starts = [(w, side, _start(model, tables, forest, w, side)) for w in W for side in (TAIL, HEAD)]
    queries = {}
    stops = {}
    for i, (_, _, st) in enumerate(starts):
        if st.entry == NONE:
            continue
        if st.cov.full:
            stops[i] = st.entry
        else:
            room = st.cov.cs + model.m - st.cov.ce
            queries.setdefault(st.entry, []).append((i, tuple(st.chosen), room))
    stops.update(_path_stops(model, forest, tables.p_t, queries))
    return [_finish(model, tables, forest, w, side, st, stops.get(i, NONE)) for i, (w, side, st) in enumerate(starts)]


def materialize(tables: ArcTables, forest: SuccessorForest, cand: CandidateSolution) -> PairSet:
    """Pair list of a fast candidate: seed, forest path, augmentation pairs."""
    p = tables.p_t
    pairs = []
    if cand.side == HEAD:
        pairs.append((cand.candidate, tables.p_h[cand.candidate]))
    if cand._entry != NONE:
        v = cand._entry
        while True:
            pairs.append((v, p[v]))
            if v == cand._last:
                break
            v = forest.parent[v]
    pairs.extend((a, p[a]) for a in cand._aug)
    return PairSet.from_pairs(pairs)


def solve_circular_fast(model: ArcModel, *, debug=None):
    """Returns (PairSet, SolveReport)."""
    debug = _debug.enabled(debug)
    t0 = time.perf_counter()
    tables = compute_arc_partners(model)
    if NONE in tables.p_t:
        v = tables.p_t.index(NONE)
        raise Infeasible(f"vertex v{v + 1} is isolated")
    t1 = time.perf_counter()
    W = compute_candidate_set(model, tables).W
    forest = build_successor_forest(model, tables)
    t2 = time.perf_counter()
    flat = _fast_candidates(model, tables, forest, W)
    cands = list(zip(flat[::2], flat[1::2]))
    best = _pick(cands)
    if best is None:
        raise Infeasible("no candidate seed yields a paired-dominating set")
    best.pairs = materialize(tables, forest, best)
    t3 = time.perf_counter()
    if debug:
        from .oracle import verify_pairs

        for c in flat:
            if c.feasible:
                got = materialize(tables, forest, c)
                assert len(got) == c.size, "materialized size differs from the path count"
                verify_pairs(model, got)
    report = SolveReport(
        "circular",
        "fast",
        best.pairs,
        [c for pair in cands for c in pair],
        {"tables": t1 - t0, "forest": t2 - t1, "candidates": t3 - t2, "total": t3 - t0},
    )
    return best.pairs, report
