"""Oblivious block shrinking and block-wise edit distance (Batu 2006 style).

Blocking of a string depends on that string alone:

1. ``j`` rounds of deterministic coin tossing relabel each position from its
   own label and its left neighbour's (lowest differing bit index and the
   bit value there). Equal neighbours get a label above every regular one.
2. A position starts a block iff its label is strictly below every label
   within distance c-1, so marked starts are at least c apart.
3. Segments longer than 2c-1 are cut every 2c-1 positions; a short tail
   borrows from the piece before it. A leading or trailing block shorter
   than c merges into its neighbour.

Each block becomes one symbol identified by its content.
"""
from __future__ import annotations

import numpy as np

from ..errors import InputError
from ..strcore import StringLike, SymbolString, check_same_alphabet, levenshtein
from .params import BatuParams

# Label widths used when no alphabet is attached.
_STR_WIDTH = 21  # covers every Unicode code point
_INT_WIDTH = 62


def _initial_labels(x: StringLike) -> tuple[np.ndarray, tuple, int]:
    if isinstance(x, SymbolString):
        return np.array(x.data, dtype=np.int64), x.data, x.alphabet.bit_width
    if isinstance(x, str):
        return np.array([ord(ch) for ch in x], dtype=np.int64), tuple(x), _STR_WIDTH
    seq = tuple(int(v) for v in x)
    if any(not 0 <= v < 2**62 for v in seq):
        raise InputError("integer symbols must lie in [0, 2**62)")
    return np.array(seq, dtype=np.int64), seq, _INT_WIDTH


def reduce_alphabet(labels: np.ndarray, width: int) -> tuple[np.ndarray, int]:
    """One coin-tossing round; returns the new labels and their bit width."""
    prev = np.concatenate([[0], labels[:-1]]).astype(np.int64)
    diff = labels ^ prev
    equal = diff == 0
    low = diff & -diff  # lowest set bit
    idx = np.zeros_like(labels)
    nz = ~equal
    idx[nz] = np.log2(low[nz].astype(float)).astype(np.int64)
    bit = (labels >> idx) & 1
    out = np.where(equal, 2 * width, 2 * idx + bit)
    return out, max(1, int(2 * width).bit_length())


def _local_minima(labels: np.ndarray, c: int) -> np.ndarray:
    n = len(labels)
    ok = np.ones(n, dtype=bool)
    big = np.iinfo(np.int64).max
    for d in range(1, c):
        if d >= n:
            break
        right = np.concatenate([labels[d:], np.full(d, big)])
        left = np.concatenate([np.full(d, big), labels[:-d]])
        ok &= (labels < right) & (labels < left)
    return np.flatnonzero(ok)


def _split(length: int, c: int) -> list[int]:
    cap = 2 * c - 1
    if length <= cap:
        return [length]
    pieces = [cap] * (length // cap)
    rest = length % cap
    if rest:
        if rest < c:
            pieces[-1] -= c - rest
            rest = c
        pieces.append(rest)
    return pieces


def batu_blocks(x: StringLike, p: BatuParams = BatuParams()) -> list[tuple[int, int]]:
    """Half-open (start, end) block intervals of ``x``."""
    labels, _, width = _initial_labels(x)
    n = len(labels)
    if n == 0:
        return []
    for _ in range(p.j):
        labels, width = reduce_alphabet(labels, width)
    starts = sorted(set(_local_minima(labels, p.c).tolist()) | {0})
    lengths = []
    for s, e in zip(starts, starts[1:] + [n]):
        lengths.extend(_split(e - s, p.c))
    if len(lengths) > 1 and lengths[0] < p.c:
        head = lengths.pop(0)
        lengths[0] += head
    if len(lengths) > 1 and lengths[-1] < p.c:
        tail = lengths.pop()
        lengths[-1] += tail
    bounds = np.concatenate([[0], np.cumsum(lengths)]).tolist()
    return list(zip(bounds[:-1], bounds[1:]))


def batu_shrink(x: StringLike, p: BatuParams = BatuParams()) -> tuple[tuple, ...]:
    """Shrunk string: one content-identified symbol per block."""
    _, seq, _ = _initial_labels(x)
    return tuple(tuple(seq[s:e]) for s, e in batu_blocks(x, p))


def batu_distance(x: StringLike, y: StringLike, p: BatuParams = BatuParams()) -> int:
    """(2c-1) times the edit distance between the shrunk strings."""
    check_same_alphabet(x, y)
    return (2 * p.c - 1) * levenshtein(batu_shrink(x, p), batu_shrink(y, p))
