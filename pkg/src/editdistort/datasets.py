"""Random pair generation, FASTA ingestion with length buckets, and pair files.

Randomness: every pair draws from its own PCG64 stream seeded by
``SeedSequence(seed, spawn_key=(pair_index,))``, so a dataset is a pure
function of (spec, seed) whatever the generation order. Draw order per pair:
the n symbols of x, then per edit the operation choice (skipped when the
remaining budget is 1), the position(s), then the symbol.
"""
from __future__ import annotations

import json
import string
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError, SchemaError
from .strcore import Alphabet, SymbolString, edit_distance

__all__ = [
    "RandomSpec",
    "BucketSpec",
    "PairRecord",
    "random_alphabet",
    "pair_rng",
    "gen_random_pair",
    "gen_random_pairs",
    "read_fasta",
    "ingest_fasta",
    "sample_pairs",
    "format_pairs",
    "write_pairs",
    "read_pairs",
    "PAIR_COLUMNS",
]

SYMBOL_POOL = string.ascii_uppercase + string.ascii_lowercase + string.digits
PAIR_COLUMNS = ("id", "x", "y", "exact", "source", "params")
SUBSTITUTION_P = 2 / 3


@dataclass(frozen=True)
class RandomSpec:
    """Random dataset: x uniform over Σ^n, y = x edited with total cost e.

    ``distinct_substitution`` makes a substitution always pick a symbol other
    than the current one; with False the new symbol is uniform over all of Σ.
    """

    n: int
    sigma: int
    e: int
    count: int = 200
    seed: int = 0
    distinct_substitution: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be >= 1")
        if not 2 <= self.sigma <= len(SYMBOL_POOL):
            raise InputError(f"sigma must lie in [2, {len(SYMBOL_POOL)}]")
        if self.e < 1:
            raise InputError("edit budget e must be >= 1")
        if self.count < 1:
            raise InputError("count must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be a 64-bit unsigned integer")

    @property
    def alphabet(self) -> Alphabet:
        return random_alphabet(self.sigma)

    def params(self) -> dict:
        return {"n": self.n, "sigma": self.sigma, "e": self.e, "seed": self.seed}


# Admission ranges of the corpus buckets; other targets use [n, 3n - 1].
BUCKET_MAX = {100: 299, 300: 999, 1000: 2999}


@dataclass(frozen=True)
class BucketSpec:
    """Admit raw lengths in [target_n, max_len] and truncate to target_n."""

    target_n: int

    def __post_init__(self):
        if self.target_n < 1:
            raise InputError("bucket target must be >= 1")

    @property
    def min_len(self) -> int:
        return self.target_n

    @property
    def max_len(self) -> int:
        return BUCKET_MAX.get(self.target_n, 3 * self.target_n - 1)

    def admits(self, length: int) -> bool:
        return self.min_len <= length <= self.max_len


@dataclass
class PairRecord:
    id: int
    x: SymbolString
    y: SymbolString
    exact: int | None = None
    source: str = ""
    params: dict = field(default_factory=dict)

    def with_exact(self) -> "PairRecord":
        if self.exact is None:
            self.exact = edit_distance(self.x, self.y)
        return self


def random_alphabet(sigma: int) -> Alphabet:
    return Alphabet(tuple(SYMBOL_POOL[:sigma]))


def pair_rng(seed: int, pair_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(pair_index,))))


def gen_random_pair(spec: RandomSpec, pair_index: int) -> PairRecord:
    rng = pair_rng(spec.seed, pair_index)
    sigma = spec.sigma
    x = [int(v) for v in rng.integers(0, sigma, size=spec.n)]
    y = list(x)
    remaining = spec.e
    while remaining > 0:
        substitute = remaining == 1 or rng.random() < SUBSTITUTION_P
        if substitute:
            pos = int(rng.integers(len(y)))
            if spec.distinct_substitution:
                sym = int(rng.integers(sigma - 1))
                sym += sym >= y[pos]
            else:
                sym = int(rng.integers(sigma))
            y[pos] = sym
            remaining -= 1
        else:
            del y[int(rng.integers(len(y)))]
            pos = int(rng.integers(len(y) + 1))
            y.insert(pos, int(rng.integers(sigma)))
            remaining -= 2
    alphabet = spec.alphabet
    return PairRecord(
        pair_index,
        SymbolString(alphabet, tuple(x)),
        SymbolString(alphabet, tuple(y)),
        source="random",
        params=spec.params(),
    )


def gen_random_pairs(spec: RandomSpec, with_exact: bool = True) -> list[PairRecord]:
    pairs = [gen_random_pair(spec, i) for i in range(spec.count)]
    if with_exact:
        for p in pairs:
            p.with_exact()
    return pairs


def read_fasta(lines: Iterable[str], origin: str = "<fasta>") -> Iterator[tuple[str, str]]:
    """Yield (header, sequence) records; sequences are whitespace-free upper case."""
    header, chunks = None, []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith(";"):
            continue
        if line.startswith(">"):
            if header is not None:
                yield header, "".join(chunks)
            header, chunks = line[1:].strip(), []
        elif header is None:
            raise InputError(f"{origin}:{lineno}: sequence data before any '>' header")
        else:
            chunks.append("".join(line.split()).upper())
    if header is not None:
        yield header, "".join(chunks)


def ingest_fasta(path: str | Path, bucket: BucketSpec) -> list[SymbolString]:
    """Sequences whose raw length falls in the bucket, truncated to its target length."""
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            kept = [seq[:bucket.target_n] for _, seq in read_fasta(fh, str(path)) if bucket.admits(len(seq))]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not kept:
        return []
    alphabet = Alphabet.from_texts(*kept)
    return [alphabet.encode(s) for s in kept]


def sample_pairs(strings: Sequence[SymbolString], count: int, seed: int, source: str = "corpus") -> list[PairRecord]:
    """``count`` pairs of distinct indices, drawn independently (with replacement across draws)."""
    m = len(strings)
    if m < 2:
        raise InputError("need at least two strings to form pairs")
    if count < 1:
        raise InputError("count must be >= 1")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    out = []
    for pid in range(count):
        i = int(rng.integers(m))
        j = int(rng.integers(m - 1))
        j += j >= i
        out.append(PairRecord(pid, strings[i], strings[j], source=source, params={"i": i, "j": j}))
    return out


# -- pair files ---------------------------------------------------------------

_FORBIDDEN = set("\t\r\n")


def _symbol_text(alphabet: Alphabet) -> str:
    out = []
    for s in alphabet.symbols:
        if not isinstance(s, str) or len(s) != 1 or s in _FORBIDDEN:
            raise InputError(f"symbol {s!r} cannot be stored in a pair file")
        out.append(s)
    return "".join(out)


def _dump_params(record: PairRecord) -> str:
    if "alphabet" in record.params:
        raise InputError("params key 'alphabet' is reserved")
    if record.x.alphabet != record.y.alphabet:
        raise InputError(f"pair {record.id}: x and y use different alphabets")
    meta = dict(record.params, alphabet=_symbol_text(record.x.alphabet))
    return json.dumps(meta, sort_keys=True, separators=(",", ":"))


def format_pairs(pairs: Iterable[PairRecord]) -> str:
    lines = ["\t".join(PAIR_COLUMNS)]
    for r in pairs:
        if _FORBIDDEN & set(r.source):
            raise InputError("source tag may not contain tabs or newlines")
        exact = "" if r.exact is None else str(int(r.exact))
        lines.append("\t".join([str(r.id), r.x.text, r.y.text, exact, r.source, _dump_params(r)]))
    return "\n".join(lines) + "\n"


def write_pairs(pairs: Iterable[PairRecord], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_pairs(pairs))


def read_pairs(path: str | Path) -> list[PairRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise SchemaError(f"{path}: empty pair file")
    header = lines[0].split("\t")
    for col in PAIR_COLUMNS:
        if col not in header:
            raise SchemaError(f"{path}:1: missing column {col!r}")
    pos = {c: header.index(c) for c in PAIR_COLUMNS}
    alphabets: dict[str, Alphabet] = {}
    out = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(header):
            raise SchemaError(f"{path}:{lineno}: expected {len(header)} fields, got {len(cells)}")
        row = {c: cells[i] for c, i in pos.items()}
        try:
            meta = json.loads(row["params"])
            symbols = meta.pop("alphabet")
            alphabet = alphabets.get(symbols) or alphabets.setdefault(symbols, Alphabet(tuple(symbols)))
            out.append(PairRecord(
                int(row["id"]),
                alphabet.encode(row["x"]),
                alphabet.encode(row["y"]),
                int(row["exact"]) if row["exact"] else None,
                row["source"],
                meta,
            ))
        except (ValueError, KeyError, TypeError, InputError) as exc:
            raise SchemaError(f"{path}:{lineno}: {exc}") from exc
    return out
