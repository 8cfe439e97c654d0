"""Command-line entry point: gen, solve, verify, oracle, convert, bench."""

from __future__ import annotations

import argparse
import sys

from . import instances
from .circular import solve_circular_fast, solve_circular_naive
from .errors import Infeasible, InvalidSolution, MalformedModel, ScaleExceeded
from .interval import solve_interval
from .model import IntervalModel, vertex_name
from .oracle import min_paired_dominating_bruteforce, verify_pairs

EXIT_OK, EXIT_INFEASIBLE, EXIT_MALFORMED = 0, 1, 2


class UsageError(Exception):
    pass


def format_solution(pairs) -> str:
    lines = [f"size {2 * len(pairs)}"]
    lines += [f"pair {vertex_name(a)} {vertex_name(b)}" for a, b in pairs]
    return "\n".join(lines) + "\n"


def _vertex(tok, lineno):
    if not (tok.startswith("v") and tok[1:].isdigit() and int(tok[1:]) >= 1):
        raise MalformedModel(f"solution line {lineno}: bad vertex name {tok!r}")
    return int(tok[1:]) - 1


def parse_solution(text):
    """Inverse of format_solution; returns a list of 0-based pairs."""
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines or not lines[0].startswith("size "):
        raise MalformedModel("solution must start with 'size <k>'")
    try:
        size = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise MalformedModel("solution line 1: bad size") from None
    pairs = []
    for lineno, line in enumerate(lines[1:], 2):
        toks = line.split()
        if len(toks) != 3 or toks[0] != "pair":
            raise MalformedModel(f"solution line {lineno}: expected 'pair <u> <v>'")
        pairs.append((_vertex(toks[1], lineno), _vertex(toks[2], lineno)))
    if size != 2 * len(pairs):
        raise MalformedModel(f"declared size {size} but {len(pairs)} pairs listed")
    return pairs


def _read(path):
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise MalformedModel(f"{path} is not ASCII text") from None


def _emit(text, out):
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def solve_model(model, algo="fast"):
    if isinstance(model, IntervalModel):
        return solve_interval(model)
    if algo == "naive":
        return solve_circular_naive(model)
    return solve_circular_fast(model)[0]


def cmd_gen(args):
    if args.kind is None or args.n is None:
        raise UsageError("gen needs --kind and --n")
    policy = instances.ALLOW if args.allow_isolated else instances.FORBID
    try:
        config = instances.GenConfig(args.kind, args.n, args.seed, policy)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(instances.serialize(instances.generate(config)), args.out)
    return EXIT_OK


def cmd_solve(args):
    model = instances.parse(_read(args.model))
    if args.algo and isinstance(model, IntervalModel):
        raise UsageError("--algo applies to circular models only")
    pairs = solve_model(model, args.algo or "fast")
    _emit(format_solution(pairs.pairs), args.out)
    return EXIT_OK


def cmd_verify(args):
    model = instances.parse(_read(args.model))
    pairs = parse_solution(_read(args.solution))
    try:
        verify_pairs(model, pairs)
    except InvalidSolution as exc:
        print(f"INVALID {exc}")
        return EXIT_INFEASIBLE
    print("OK")
    return EXIT_OK


def cmd_oracle(args):
    model = instances.parse(_read(args.model))
    res = min_paired_dominating_bruteforce(model)
    if not res.feasible:
        print("INFEASIBLE")
        return EXIT_INFEASIBLE
    print(f"size {res.min_size}")
    return EXIT_OK


def parse_raw(text):
    """Coordinate file for convert: one 'a b' pair per line, '#' comments."""
    raw = []
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise MalformedModel(f"line {lineno}: expected two coordinates")
        try:
            raw.append((float(toks[0]), float(toks[1])))
        except ValueError:
            raise MalformedModel(f"line {lineno}: coordinates must be numbers") from None
    return raw


def cmd_convert(args):
    if args.kind is None:
        raise UsageError("convert needs --kind")
    model = instances.normalize(parse_raw(_read(args.input)), args.kind)
    _emit(instances.serialize(model), args.out)
    return EXIT_OK


def cmd_bench(args):
    from .bench import bench_scaling, format_table

    if args.repeats < 1 or any(n < 3 for n in args.sizes):
        raise UsageError("bench needs --repeats >= 1 and sizes >= 3")
    rows = bench_scaling(args.sizes, args.repeats, tuple(args.targets), args.seed)
    _emit(format_table(rows), args.out)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="pairdom", description="Minimum paired domination on interval and circular-arc models.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random model")
    p.add_argument("--kind", choices=("interval", "circular"))
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-isolated", action="store_true", help="skip the no-isolated-vertex rejection step")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="print a minimum paired-dominating set")
    p.add_argument("model")
    p.add_argument("--algo", choices=("naive", "fast"), help="circular solver (default fast)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against a model")
    p.add_argument("model")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force minimum for small models")
    p.add_argument("model")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("convert", help="normalize raw coordinates into a model file")
    p.add_argument("input")
    p.add_argument("--kind", choices=("interval", "circular"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("bench", help="scaling table for the solvers")
    p.add_argument("--sizes", type=int, nargs="+", default=[100_000, 200_000, 400_000, 800_000])
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument(
        "--targets",
        nargs="+",
        choices=("interval", "circular-fast", "circular-naive", "normalize"),
        default=["interval", "circular-fast", "normalize"],
    )
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except Infeasible:
        print("INFEASIBLE")
        return EXIT_INFEASIBLE
    except (MalformedModel, UsageError, ScaleExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main():
    sys.exit(run())
