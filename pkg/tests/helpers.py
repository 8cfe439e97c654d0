"""Definition-direct O(n^2) reference tables and shared instance builders."""

import random
from pathlib import Path

from pairdom.errors import MalformedModel
from pairdom.instances import normalize, read_model
from pairdom.model import NONE, validate_arc_model, validate_interval_model

DATA = Path(__file__).parent / "data"

P4I = validate_interval_model([(1, 3), (2, 5), (4, 7), (6, 8)])
TRI = validate_arc_model([(1, 4), (3, 6), (5, 2)])
TWO_DISJOINT = validate_interval_model([(1, 2), (3, 4)])
FIVE_ARCS = validate_arc_model([(1, 4), (3, 6), (5, 8), (7, 10), (9, 2)])


def fixture(name):
    return read_model(DATA / name)


def names(vs):
    return {f"v{v + 1}" for v in vs}


def short_arc_model(n, rng, max_len=None):
    """Arcs with random heads and mostly short lengths on a real circle."""
    while True:
        cap = max_len or rng.choice([8, 20, 40, 70])
        pts = []
        for _ in range(n):
            h = rng.uniform(0, 100)
            pts.append((h, (h + rng.uniform(1, cap)) % 100))
        try:
            return normalize(pts, "circular")
        except MalformedModel:
            continue


# ---- interval tables by definition


def direct_p(model):
    out = []
    for v in range(model.n):
        nb = [u for u in range(model.n) if u != v and model.intersect(u, v)]
        out.append(max(nb, key=lambda u: model.right[u]) if nb else NONE)
    return out


def direct_f(model):
    out = []
    for v in range(model.n):
        later = [u for u in range(model.n) if model.left[u] > model.right[v]]
        out.append(min(later, key=lambda u: model.left[u]) if later else NONE)
    return out


def direct_c(model):
    return [min(range(v, model.n), key=lambda u: model.right[u]) for v in range(model.n)]


# ---- arc tables by definition


def direct_p_t(model):
    m, out = model.m, []
    for v in range(model.n):
        t = model.tail[v]
        nb = [u for u in range(model.n) if u != v and model.intersect(u, v)]
        holding = [u for u in nb if model.contains(u, t)]
        if holding:
            out.append(max(holding, key=lambda u: (model.tail[u] - t) % m))
        elif nb:
            out.append(max(nb, key=lambda u: (model.tail[u] - model.head[v]) % m))
        else:
            out.append(NONE)
    return out


def direct_p_h(model):
    m, out = model.m, []
    for v in range(model.n):
        h = model.head[v]
        nb = [u for u in range(model.n) if u != v and model.intersect(u, v)]
        holding = [u for u in nb if model.contains(u, h)]
        if holding:
            out.append(max(holding, key=lambda u: (h - model.head[u]) % m))
        elif nb:
            out.append(max(nb, key=lambda u: (model.tail[v] - model.head[u]) % m))
        else:
            out.append(NONE)
    return out


def arc_inside(model, u, v):
    """Is arc u contained in arc v (u != v)?"""
    return (model.head[u] - model.head[v]) % model.m + model.length(u) <= model.length(v)


def direct_maximal(model):
    return [not any(arc_inside(model, v, u) for u in range(model.n) if u != v) for v in range(model.n)]


def direct_near_v1(model):
    return [v == 0 or model.intersect(0, v) for v in range(model.n)]


def forest_problems(model, tables, forest):
    """Structural checks on the successor forest; returns a list of messages."""
    bad = []
    n = model.n
    for v, u in forest.edges():
        if tables.near_v1[u] or tables.near_v1[tables.p_t[u]]:
            bad.append(f"edge v{v + 1} -> v{u + 1} enters N[v1]")
    # out-degree <= 1 holds by construction (one parent slot); look for cycles
    for v in range(n):
        seen, x = set(), v
        while x != NONE:
            if x in seen:
                bad.append(f"cycle through v{x + 1}")
                break
            seen.add(x)
            x = forest.parent[x]
        if forest.pathlen[v] != len(forest.path(v)):
            bad.append(f"pathlen of v{v + 1} is off")
    return bad


def random_seeds(base, count):
    rng = random.Random(base)
    return [rng.getrandbits(48) for _ in range(count)]


def local_greedy(model, tables, w, side):
    """Greedy candidate by direct scans, taking undominated arcs in tail
    order clockwise from the start of the seed pair's coverage.  Matches the
    literal order whenever the seed covers t(v1)."""
    from pairdom.circular import TAIL, pair_span

    p = tables.p_t
    x = p[w] if side == TAIL else tables.p_h[w]
    span = pair_span(model, w, x)
    origin = model.head[w] if span is None else span[0]
    pairs, chosen = [(w, x)], {w, x}
    while True:
        und = [v for v in range(model.n) if v not in chosen and not any(model.intersect(v, s) for s in chosen)]
        if not und:
            return pairs
        u = min(und, key=lambda v: (model.tail[v] - origin) % model.m)
        a, b = (u, p[u]) if p[p[u]] in chosen else (p[u], p[p[u]])
        assert a not in chosen and b not in chosen
        pairs.append((a, b))
        chosen.update((a, b))
