"""Experimental harness: approximate distances over pair sets and CSV artifacts."""
from __future__ import annotations

import csv
import io
import math
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .approx import (
    BatuParams,
    HierAlignParams,
    QGramParams,
    andoni09_distance,
    andoni10_distance,
    baryossef_distance,
    batu_distance,
    charikar_distance,
    sokolov_distance,
)
from .datasets import PairRecord
from .distortion import DistortionReport, RatioSample, empirical_distortion
from .errors import InputError, SchemaError
from .theory import TheoryPoint
from .ulam import expand_pair

__all__ = [
    "ALGORITHMS",
    "CONTROL",
    "RESULT_COLUMNS",
    "THEORY_COLUMNS",
    "BEST_COLUMNS",
    "RATIO_COLUMNS",
    "InvariantError",
    "PairResult",
    "BenchRow",
    "default_candidates",
    "approx_distance",
    "evaluate",
    "run_bench",
    "fmt",
    "write_results",
    "write_theory",
    "write_ratios",
    "read_ratios",
    "best_summary",
]

ALGORITHMS = ("baryossef", "batu", "charikar", "sokolov", "andoni09", "andoni10")
CONTROL = "identity"
ULAM_BASED = frozenset({"charikar", "andoni09"})

RESULT_COLUMNS = (
    "dataset", "algorithm", "params", "n", "sigma", "edits", "theta", "K", "Kprime",
    "min_ratio", "max_ratio", "mean_ratio", "pairs_used", "pairs_excluded", "mean_call_us",
)
THEORY_COLUMNS = ("algorithm", "n", "theta", "k", "c", "j", "K")
BEST_COLUMNS = ("sigma", "n", "edits", "best", "K")
RATIO_COLUMNS = ("algorithm", "params", "id", "exact", "approx", "t")


class InvariantError(RuntimeError):
    """A built-in consistency check of the pipeline failed."""


def default_candidates(
    algos: Sequence[str] = ALGORITHMS,
    q_set: Sequence[int] = (2, 4, 6),
    c_set: Sequence[int] = (2, 4),
    prune_width: float = math.inf,
) -> dict[str, list]:
    """Parameter candidates per algorithm; the best-K candidate is reported."""
    table = {
        "baryossef": [QGramParams(q) for q in q_set],
        "sokolov": [QGramParams(q) for q in q_set],
        "batu": [BatuParams(c, 1) for c in c_set],
        "andoni10": [HierAlignParams(prune_width=prune_width)],
        "charikar": [None],
        "andoni09": [None],
        CONTROL: [None],
    }
    out = {}
    for a in algos:
        if a not in table:
            raise InputError(f"unknown algorithm {a!r}")
        if not table[a]:
            raise InputError(f"empty parameter candidate set for {a}")
        out[a] = table[a]
    return out


def params_label(params) -> str:
    return "" if params is None else params.label()


def approx_distance(algorithm: str, record: PairRecord, params) -> tuple[float, int | None]:
    """Approximate distance for one pair and the expansion order t (Ulam-based only)."""
    x, y = record.x, record.y
    if algorithm in ULAM_BASED:
        X, Y, t = expand_pair(x, y)
        fn = charikar_distance if algorithm == "charikar" else andoni09_distance
        return fn(X, Y), t
    if algorithm == "baryossef":
        return baryossef_distance(x, y, params), None
    if algorithm == "sokolov":
        return sokolov_distance(x, y, params), None
    if algorithm == "batu":
        return batu_distance(x, y, params), None
    if algorithm == "andoni10":
        return andoni10_distance(x, y, params), None
    if algorithm == CONTROL:
        return record.with_exact().exact, None
    raise InputError(f"unknown algorithm {algorithm!r}")


@dataclass(frozen=True)
class PairResult:
    id: int
    exact: int
    approx: float
    t: int | None
    seconds: float


def _eval_chunk(job) -> list[PairResult]:
    algorithm, params, chunk = job
    out = []
    for rec in chunk:
        start = time.perf_counter()
        approx, t = approx_distance(algorithm, rec, params)
        elapsed = time.perf_counter() - start
        out.append(PairResult(rec.id, rec.with_exact().exact, approx, t, elapsed))
    return out


def evaluate(pairs: Sequence[PairRecord], algorithm: str, params, threads: int = 1) -> list[PairResult]:
    """Per-pair results sorted by pair id, identical for any ``threads``."""
    for p in pairs:
        p.with_exact()
    if threads <= 1 or len(pairs) < 2:
        results = _eval_chunk((algorithm, params, list(pairs)))
    else:
        size = max(1, math.ceil(len(pairs) / (4 * threads)))
        jobs = [(algorithm, params, list(pairs[i:i + size])) for i in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = [r for chunk in pool.map(_eval_chunk, jobs) for r in chunk]
    return sorted(results, key=lambda r: r.id)


@dataclass
class BenchRow:
    dataset: str
    algorithm: str
    params: str
    n: int
    sigma: int
    edits: int | None
    theta: float
    report: DistortionReport | None = None
    mean_call_us: float | None = None
    error: str | None = None
    results: list[PairResult] = field(default_factory=list, repr=False)

    @property
    def K(self) -> float:
        return math.nan if self.report is None else self.report.K

    def cells(self, timing: bool = True) -> list[str]:
        head = [self.dataset, self.algorithm, self.params, fmt(self.n), fmt(self.sigma), fmt(self.edits), fmt(self.theta)]
        if self.report is None:
            return head + ["error"] + [""] * 7
        r = self.report
        return head + [
            fmt(r.K), fmt(r.K_prime), fmt(r.min_ratio), fmt(r.max_ratio), fmt(r.mean_ratio),
            fmt(r.n_used), fmt(r.n_excluded), fmt(self.mean_call_us) if timing else "",
        ]


def _dataset_shape(pairs: Sequence[PairRecord]) -> tuple[int, int, int | None]:
    n = max(max(len(p.x), len(p.y)) for p in pairs)
    sigma = pairs[0].x.alphabet.size
    edits = pairs[0].params.get("e")
    return n, sigma, edits


def _row(dataset, algorithm, params, pairs, theta, results) -> BenchRow:
    n, sigma, edits = _dataset_shape(pairs)
    label = params_label(params)
    ts = [r.t for r in results if r.t is not None]
    if ts:
        extra = f"t_max={max(ts)};t_mean={fmt(round(sum(ts) / len(ts), 6))}"
        label = f"{label};{extra}" if label else extra
    row = BenchRow(dataset, algorithm, label, n, sigma, edits, theta, results=results)
    try:
        row.report = empirical_distortion([RatioSample(r.exact, r.approx) for r in results], theta)
    except InputError as exc:
        row.error = str(exc)
    row.mean_call_us = 1e6 * sum(r.seconds for r in results) / len(results)
    return row


def run_bench(
    pairs: Sequence[PairRecord],
    candidates: dict[str, list],
    theta: float = 1.0,
    dataset: str = "dataset",
    threads: int = 1,
) -> tuple[list[BenchRow], list[BenchRow]]:
    """Returns (best row per algorithm, every candidate's row).

    The identity control is always evaluated and must give K = 1.
    """
    if not pairs:
        raise InputError("no pairs to benchmark")
    control = _row(dataset, CONTROL, None, pairs, theta, evaluate(pairs, CONTROL, None))
    if control.report is not None and control.report.K != 1:
        raise InvariantError(f"identity control gave K={control.report.K}")
    best, every = [], []
    for algorithm, cands in candidates.items():
        rows = []
        for params in cands:
            if algorithm == CONTROL:
                rows.append(control)
                continue
            rows.append(_row(dataset, algorithm, params, pairs, theta, evaluate(pairs, algorithm, params, threads)))
        every.extend(rows)
        ok = [r for r in rows if r.report is not None]
        # min() keeps the earliest candidate on ties
        pick = rows[0] if not ok else min(ok, key=lambda r: r.report.K)
        best.append(pick)
    return best, every


# -- CSV ---------------------------------------------------------------------

def fmt(v) -> str:
    """Shortest round-trip decimal, 'inf' for unbounded, '' for missing."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, int):
        return str(v)
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if v.is_integer() and abs(v) < 2**53:
        return str(int(v))
    return repr(v)


def _write_csv(path, header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def write_results(rows: Iterable[BenchRow], path=None, timing: bool = True) -> str:
    return _write_csv(path, RESULT_COLUMNS, [r.cells(timing) for r in rows])


def write_theory(points: Iterable[TheoryPoint], path=None) -> str:
    rows = []
    for p in points:
        j = ("inf" if p.j is None else fmt(p.j)) if p.algorithm == "batu" else ""
        rows.append([p.algorithm, fmt(p.n), fmt(p.theta), fmt(p.k), fmt(p.c), j, fmt(p.value)])
    return _write_csv(path, THEORY_COLUMNS, rows)


def write_ratios(rows: Iterable[BenchRow], path=None) -> str:
    out = []
    for row in rows:
        for r in row.results:
            out.append([row.algorithm, row.params, r.id, fmt(r.exact), fmt(r.approx), fmt(r.t)])
    return _write_csv(path, RATIO_COLUMNS, out)


def read_ratios(path) -> dict[tuple[str, str], list[RatioSample]]:
    """Per-pair distances grouped by (algorithm, params), ready for empirical_distortion."""
    groups: dict[tuple[str, str], list[RatioSample]] = {}
    with Path(path).open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != RATIO_COLUMNS:
            raise SchemaError(f"{path}: not a ratio dump (header {reader.fieldnames})")
        for rec in reader:
            key = (rec["algorithm"], rec["params"])
            groups.setdefault(key, []).append(RatioSample(float(rec["exact"]), float(rec["approx"])))
    return groups


def _parse_float(cell: str) -> float:
    return math.inf if cell == "inf" else float(cell)


def best_summary(paths: Sequence, out=None) -> str:
    """Pivot results files into the lowest-K algorithm per (sigma, n, edits) cell.

    Ties list every winner joined by '|'. Control and error rows are ignored.
    """
    if not paths:
        raise InputError("best needs at least one results file")
    cells: dict[tuple[str, str, str], list[tuple[float, str]]] = {}
    for path in paths:
        with Path(path).open(encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != RESULT_COLUMNS:
                raise SchemaError(f"{path}: unexpected results header {reader.fieldnames}")
            for rec in reader:
                if rec["algorithm"] == CONTROL or rec["K"] in ("", "error"):
                    continue
                key = (rec["sigma"], rec["n"], rec["edits"])
                cells.setdefault(key, []).append((_parse_float(rec["K"]), rec["algorithm"]))

    def order(key):
        return tuple((0, float(v)) if v else (1, 0.0) for v in key)

    rows = []
    for key in sorted(cells, key=order):
        entries = cells[key]
        k_min = min(k for k, _ in entries)
        names = sorted({a for k, a in entries if k == k_min})
        rows.append([*key, "|".join(names), fmt(k_min)])
    return _write_csv(out, BEST_COLUMNS, rows)
