"""Exhaustive minimum paired domination for small models, plus validators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidSolution, ScaleExceeded
from .model import ArcModel, IntervalModel, adjacency

MAX_ORACLE_N = 16
MAX_MATCHING_SET = 24


@dataclass(frozen=True)
class OracleResult:
    min_size: int | None  # None: infeasible
    witnesses: tuple = field(default=())

    @property
    def feasible(self):
        return self.min_size is not None


def is_dominating(adj, S) -> bool:
    S = set(S)
    return all(v in S or adj.neighbors[v] & S for v in range(adj.n))


def _masks(adj):
    return [sum(1 << u for u in nb) for nb in adj.neighbors]


def _matchable(nbmask):
    @lru_cache(maxsize=None)
    def go(mask):
        if mask == 0:
            return True
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        cand = nbmask[i] & rest
        while cand:
            bit = cand & -cand
            if go(rest ^ bit):
                return True
            cand ^= bit
        return False

    return go


def has_perfect_matching(adj, S) -> bool:
    """Does G[S] have a perfect matching?  Pairs the lowest vertex left with
    each of its neighbors in turn, memoized on the remaining bitmask."""
    S = set(S)
    if len(S) % 2:
        return False
    if len(S) > MAX_MATCHING_SET:
        raise ScaleExceeded(f"matching check limited to {MAX_MATCHING_SET} vertices")
    return _matchable(tuple(_masks(adj)))(sum(1 << v for v in S))


def min_paired_dominating_bruteforce(model, *, witnesses=False) -> OracleResult:
    n = model.n
    if n > MAX_ORACLE_N:
        raise ScaleExceeded(f"oracle limited to n <= {MAX_ORACLE_N}, got {n}")
    adj = adjacency(model)
    if any(not nb for nb in adj.neighbors):
        return OracleResult(None)
    nbmask = _masks(adj)
    closed = [nbmask[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    matchable = _matchable(tuple(nbmask))
    for k in range(2, n + 1, 2):
        found = []
        for combo in itertools.combinations(range(n), k):
            dom = 0
            mask = 0
            for v in combo:
                dom |= closed[v]
                mask |= 1 << v
            if dom == full and matchable(mask):
                if not witnesses:
                    return OracleResult(k, (frozenset(combo),))
                found.append(frozenset(combo))
        if found:
            return OracleResult(k, tuple(found))
    # unreachable: with no isolated vertex a maximal matching's endpoints pair-dominate
    return OracleResult(None)


def verify_pairs(model, pairs) -> None:
    """Raise InvalidSolution unless ``pairs`` is a paired-dominating set of ``model``.

    Runs in O(n + |pairs|) with a coverage count over endpoint labels, so it
    is usable on large models.
    """
    n = model.n
    plist = list(pairs.pairs if hasattr(pairs, "pairs") else pairs)
    seen = set()
    for a, b in plist:
        for v in (a, b):
            if not 0 <= v < n:
                raise InvalidSolution(f"vertex index {v} out of range")
            if v in seen:
                raise InvalidSolution(f"v{v + 1} appears in two pairs")
            seen.add(v)
        if a == b or not model.intersect(a, b):
            raise InvalidSolution(f"v{a + 1} and v{b + 1} are not adjacent")
    if not plist:
        raise InvalidSolution("empty set dominates nothing")

    m = 2 * n
    # covered[x] = 1 if label x lies in some chosen interval/arc
    diff = [0] * (m + 2)
    if isinstance(model, IntervalModel):
        for v in seen:
            diff[model.left[v]] += 1
            diff[model.right[v] + 1] -= 1
    elif isinstance(model, ArcModel):
        for v in seen:
            h, t = model.head[v], model.tail[v]
            if h <= t:
                diff[h] += 1
                diff[t + 1] -= 1
            else:
                diff[h] += 1
                diff[m + 1] -= 1
                diff[1] += 1
                diff[t + 1] -= 1
    else:
        raise TypeError(f"unsupported model {type(model).__name__}")
    prefix = [0] * (m + 1)
    run = 0
    for x in range(1, m + 1):
        run += diff[x]
        prefix[x] = prefix[x - 1] + (run > 0)

    def covered_between(a, b):
        return prefix[b] - prefix[a - 1] > 0

    for v in range(n):
        if v in seen:
            continue
        if isinstance(model, IntervalModel):
            ok = covered_between(model.left[v], model.right[v])
        else:
            h, t = model.head[v], model.tail[v]
            ok = covered_between(h, t) if h <= t else covered_between(h, m) or covered_between(1, t)
        if not ok:
            raise InvalidSolution(f"v{v + 1} is not dominated")


def is_valid_solution(model, pairs) -> bool:
    try:
        verify_pairs(model, pairs)
    except InvalidSolution:
        return False
    return True
