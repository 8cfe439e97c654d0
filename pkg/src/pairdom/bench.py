"""Wall-clock scaling measurements for the linear-time solvers."""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import dataclass

from .circular import solve_circular_fast, solve_circular_naive
from .instances import FORBID, GenConfig, generate, normalize
from .interval import solve_interval

DEFAULT_SIZES = (100_000, 200_000, 400_000, 800_000)

TARGETS = {
    "interval": lambda m: solve_interval(m),
    "circular-fast": lambda m: solve_circular_fast(m),
    "circular-naive": lambda m: solve_circular_naive(m),
}


@dataclass
class BenchRow:
    target: str
    n: int
    median: float
    ratio: float | None  # median / previous row's median


def _once(fn, arg):
    gc.collect()
    gc.disable()  # keep collector pauses out of the measurement
    try:
        t0 = time.perf_counter()
        fn(arg)
        return time.perf_counter() - t0
    finally:
        gc.enable()


def _timed_rounds(fn, args, repeats):
    """Median time per input, with the inputs interleaved round by round.

    Interleaving spreads slow drift in machine speed over every size instead
    of letting it land on whichever size happened to run at the time.
    """
    for arg in args:
        fn(arg)  # warm-up: first-touch allocation is not part of the solve
    times = [[] for _ in args]
    for _ in range(repeats):
        for i, arg in enumerate(args):
            times[i].append(_once(fn, arg))
    return [statistics.median(ts) for ts in times]


def _unsorted_raw(n, seed):
    rng = random.Random(seed)
    xs = [rng.random() * 1e6 for _ in range(2 * n)]
    return [(xs[i], xs[i + 1]) if xs[i] < xs[i + 1] else (xs[i + 1], xs[i]) for i in range(0, 2 * n, 2)]


def _inputs(target, n, seed):
    if target == "normalize":
        return _unsorted_raw(n, seed)
    kind = "interval" if target == "interval" else "circular"
    return generate(GenConfig(kind, n, seed, FORBID))


def bench_scaling(sizes=DEFAULT_SIZES, repeats=5, targets=("interval", "circular-fast", "normalize"), seed=1):
    """Median solve time (inputs are built before timing) per target and size."""
    rows = []
    for target in targets:
        fn = (lambda raw: normalize(raw, "interval")) if target == "normalize" else TARGETS[target]
        meds = _timed_rounds(fn, [_inputs(target, n, seed) for n in sizes], repeats)
        for i, (n, med) in enumerate(zip(sizes, meds)):
            rows.append(BenchRow(target, n, med, med / meds[i - 1] if i else None))
    return rows


def format_table(rows) -> str:
    out = ["target\tn\tmedian_s\tratio"]
    for r in rows:
        ratio = "-" if r.ratio is None else f"{r.ratio:.3f}"
        out.append(f"{r.target}\t{r.n}\t{r.median:.4f}\t{ratio}")
    return "\n".join(out) + "\n"
