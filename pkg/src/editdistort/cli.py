"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 data error, 4 internal invariant violation.
A ``--config`` file holds flat ``key = value`` lines (keys are flag names);
flags given on the command line win over it.
"""
from __future__ import annotations

import argparse
import math
import sys
from collections import Counter
from pathlib import Path

import numpy as np

from . import bench
from .datasets import (
    BucketSpec,
    RandomSpec,
    format_pairs,
    gen_random_pairs,
    ingest_fasta,
    read_pairs,
    sample_pairs,
)
from .errors import InputError
from .theory import theory_curves

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _width(text: str) -> float:
    if text.lower() in ("inf", "none", "0"):
        return math.inf
    return int(text)


def _n_grid(text: str) -> list[int]:
    """'100,300,1000' or 'start:stop:count' (log-spaced, rounded, de-duplicated)."""
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            pts = np.geomspace(float(start), float(stop), int(count))
            return sorted({int(round(v)) for v in pts})
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n grid {text!r}") from None


def _theta(text: str):
    return "n" if text == "n" else float(text)


def read_config(path: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def _common(p: argparse.ArgumentParser, out_help: str) -> None:
    p.add_argument("--config", help="flat key = value file; flags override it")
    p.add_argument("--out", help=out_help)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)


def _algo_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algos", default=",".join(bench.ALGORITHMS),
                   help=f"comma list from {', '.join(bench.ALGORITHMS + (bench.CONTROL,))}")
    p.add_argument("--q-set", type=_int_list, default="2,4,6")
    p.add_argument("--c-set", type=_int_list, default="2,4")
    p.add_argument("--prune-width", type=_width, default="inf")


def _source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pairs", help="pair file (TSV)")
    p.add_argument("--fasta", help="FASTA corpus, used with --bucket")
    p.add_argument("--bucket", type=int, help="target length n for FASTA bucketing")
    p.add_argument("--n", type=int, help="Random: string length")
    p.add_argument("--sigma", type=int, help="Random: alphabet size")
    p.add_argument("--edits", type=int, help="Random: edit cost budget e")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--dataset-id", help="label for the dataset column")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="editdistort", description="Edit-distance approximation distortion toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-random", help="generate a Random pair file")
    _common(g, "pair file to write (default stdout)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--sigma", type=int, required=True)
    g.add_argument("--edits", type=int, required=True)
    g.add_argument("--count", type=int, default=200)
    g.add_argument("--allow-same-symbol", action="store_true",
                   help="substitutions draw from all of the alphabet, possibly keeping the symbol")

    f = sub.add_parser("ingest-fasta", help="bucket a FASTA corpus and sample pairs")
    _common(f, "pair file to write (default stdout)")
    f.add_argument("--fasta", required=True)
    f.add_argument("--bucket", type=int, required=True)
    f.add_argument("--count", type=int, default=200)

    b = sub.add_parser("bench", help="experimental distortions")
    _common(b, "results CSV (best candidate per algorithm)")
    _source_flags(b)
    _algo_flags(b)
    b.add_argument("--theta", type=float, default=1.0)
    b.add_argument("--all-out", help="companion CSV with every candidate (default: <out>.candidates.csv)")
    b.add_argument("--dump-ratios", help="write per-pair exact/approx distances here")
    b.add_argument("--no-timing", action="store_true", help="leave mean_call_us empty (byte-stable output)")

    d = sub.add_parser("dump-ratios", help="per-pair exact and approximate distances")
    _common(d, "ratio CSV (default stdout)")
    _source_flags(d)
    _algo_flags(d)

    t = sub.add_parser("theory", help="refined theoretical distortion curves")
    t.add_argument("--config")
    t.add_argument("--out")
    t.add_argument("--n", type=_n_grid, default="100:10000:9", help="'a,b,c' or 'start:stop:count'")
    t.add_argument("--theta", type=_theta, default="n", help="number, or 'n' for θ = n")
    t.add_argument("--k", type=int, default=2, help="bits per symbol ⌈lg|Σ|⌉")
    t.add_argument("--c", default="rule", help="Batu c, or 'rule' for max{lglg n/lglglg n, 2}")
    t.add_argument("--batu-j", default="limit", help="'limit' or 1")

    s = sub.add_parser("best", help="best algorithm per (sigma, n, edits)")
    s.add_argument("results", nargs="+")
    s.add_argument("--config")
    s.add_argument("--out")
    return parser


def _parse(argv) -> argparse.Namespace:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    subparsers = parser._subparsers._group_actions[0].choices
    command = next((a for a in argv if a in subparsers), None)
    if known.config and command:
        try:
            values = read_config(known.config)
        except OSError as exc:
            parser.error(f"cannot read config: {exc}")
        except UsageError as exc:
            parser.error(str(exc))
        subparser = subparsers[command]
        unknown = sorted(set(values) - {a.dest for a in subparser._actions})
        if unknown:
            parser.error(f"unknown config keys: {', '.join(unknown)}")
        for action in subparser._actions:
            if action.dest in values:
                action.required = False
                if isinstance(action, argparse._StoreTrueAction):
                    values[action.dest] = values[action.dest].lower() in ("1", "true", "yes", "on")
        subparser.set_defaults(**values)
    return parser.parse_args(argv)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_pairs(args) -> tuple[list, str]:
    if args.pairs:
        return [p.with_exact() for p in read_pairs(args.pairs)], args.dataset_id or Path(args.pairs).stem
    if args.fasta:
        if not args.bucket:
            raise UsageError("--fasta needs --bucket")
        strings = ingest_fasta(args.fasta, BucketSpec(args.bucket))
        pairs = [p.with_exact() for p in sample_pairs(strings, args.count, args.seed, source="fasta")]
        return pairs, args.dataset_id or f"{Path(args.fasta).stem}-n{args.bucket}"
    if None in (args.n, args.sigma, args.edits):
        raise UsageError("give --pairs, --fasta/--bucket, or all of --n/--sigma/--edits")
    spec = _random_spec(args)
    return gen_random_pairs(spec), args.dataset_id or f"random-n{spec.n}-s{spec.sigma}-e{spec.e}"


def _random_spec(args, distinct: bool = True) -> RandomSpec:
    try:
        return RandomSpec(args.n, args.sigma, args.edits, args.count, args.seed, distinct)
    except InputError as exc:
        raise UsageError(str(exc)) from None


def _candidates(args) -> dict:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    if not algos:
        raise UsageError("--algos is empty")
    try:
        return bench.default_candidates(algos, args.q_set, args.c_set, args.prune_width)
    except InputError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    spec = _random_spec(args, distinct=not args.allow_same_symbol)
    pairs = gen_random_pairs(spec)
    _emit(format_pairs(pairs), args.out)
    hist = Counter(p.exact for p in pairs)
    summary = " ".join(f"{d}:{hist[d]}" for d in sorted(hist))
    print(f"pairs={len(pairs)} d_e histogram {summary}", file=sys.stderr)
    return EXIT_OK


def cmd_ingest(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    strings = ingest_fasta(args.fasta, BucketSpec(args.bucket))
    pairs = [p.with_exact() for p in sample_pairs(strings, args.count, args.seed, source="fasta")]
    _emit(format_pairs(pairs), args.out)
    print(f"strings={len(strings)} pairs={len(pairs)} sigma={pairs[0].x.alphabet.size}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.theta < 0:
        raise UsageError("--theta must be >= 0")
    candidates = _candidates(args)
    pairs, dataset = _load_pairs(args)
    best, every = bench.run_bench(pairs, candidates, args.theta, dataset, args.threads)
    timing = not args.no_timing
    _emit(bench.write_results(best, timing=timing), args.out)
    all_out = args.all_out or (f"{args.out}.candidates.csv" if args.out else None)
    if all_out:
        bench.write_results(every, all_out, timing=timing)
    if args.dump_ratios:
        bench.write_ratios(every, args.dump_ratios)
    failed = [r for r in best if r.report is None]
    for r in failed:
        print(f"{r.algorithm}: {r.error}", file=sys.stderr)
    return EXIT_DATA if failed else EXIT_OK


def cmd_dump(args) -> int:
    candidates = _candidates(args)
    pairs, dataset = _load_pairs(args)
    _, every = bench.run_bench(pairs, candidates, 0.0, dataset, args.threads)
    _emit(bench.write_ratios(every), args.out)
    return EXIT_OK


def cmd_theory(args) -> int:
    grid = args.n
    if not grid or any(n < 2 for n in grid):
        raise UsageError("n grid needs values >= 2")
    c = None if str(args.c) == "rule" else float(args.c)
    j = None if str(args.batu_j) == "limit" else int(args.batu_j)
    try:
        points = theory_curves(grid, args.theta, args.k, c, j)
    except InputError as exc:
        raise UsageError(str(exc)) from None
    _emit(bench.write_theory(points), args.out)
    return EXIT_OK


def cmd_best(args) -> int:
    _emit(bench.best_summary(args.results), args.out)
    return EXIT_OK


COMMANDS = {
    "gen-random": cmd_gen,
    "ingest-fasta": cmd_ingest,
    "bench": cmd_bench,
    "dump-ratios": cmd_dump,
    "theory": cmd_theory,
    "best": cmd_best,
}


def main(argv=None) -> int:
    args = _parse(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except bench.InvariantError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
