"""Alphabets, symbol strings and the exact edit distance.

Strings are stored as tuples of dense integer indices into an :class:`Alphabet`.
Documentation uses 1-based positions ``x[i]``; Python indexing stays 0-based.
"""
from __future__ import annotations

import math
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import InputError

__all__ = [
    "Alphabet",
    "SymbolString",
    "edit_distance",
    "edit_distance_oracle",
    "levenshtein",
    "ORACLE_MAX_LEN",
]

ORACLE_MAX_LEN = 10


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[Hashable, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise InputError("alphabet must contain at least one symbol")
        index = {s: i for i, s in enumerate(symbols)}
        if len(index) != len(symbols):
            raise InputError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_texts(cls, *texts: Sequence) -> "Alphabet":
        """Alphabet of every symbol observed in ``texts``, sorted."""
        seen = set()
        for t in texts:
            seen.update(t)
        return cls(tuple(sorted(seen)))

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def bit_width(self) -> int:
        """k = ceil(lg |alphabet|), at least 1."""
        return max(1, math.ceil(math.log2(self.size)))

    def __len__(self) -> int:
        return self.size

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise InputError(f"symbol {symbol!r} not in alphabet") from None

    def encode(self, text: Sequence) -> "SymbolString":
        return SymbolString(self, tuple(self.index(s) for s in text))

    def decode(self, data: Sequence[int]) -> tuple:
        return tuple(self.symbols[i] for i in data)


@dataclass(frozen=True)
class SymbolString:
    alphabet: Alphabet
    data: tuple[int, ...]

    def __post_init__(self):
        data = tuple(int(i) for i in self.data)
        object.__setattr__(self, "data", data)
        size = self.alphabet.size
        for i in data:
            if not 0 <= i < size:
                raise InputError(f"symbol index {i} outside alphabet of size {size}")

    @classmethod
    def from_text(cls, text: Sequence, alphabet: Alphabet | None = None) -> "SymbolString":
        if alphabet is None:
            if not text:
                raise InputError("cannot infer an alphabet from an empty string")
            alphabet = Alphabet.from_texts(text)
        return alphabet.encode(text)

    def __len__(self) -> int:
        return len(self.data)

    def __iter__(self):
        return iter(self.data)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return SymbolString(self.alphabet, self.data[item])
        return self.data[item]

    @property
    def symbols(self) -> tuple:
        return self.alphabet.decode(self.data)

    @property
    def text(self) -> str:
        return "".join(str(s) for s in self.symbols)

    def __str__(self) -> str:
        return self.text


StringLike = Union[SymbolString, Sequence]


def as_sequence(x: StringLike) -> tuple:
    """Comparable symbol tuple for either a SymbolString or a plain sequence."""
    if isinstance(x, SymbolString):
        return x.data
    return tuple(x)


def check_same_alphabet(x: StringLike, y: StringLike) -> None:
    xs, ys = isinstance(x, SymbolString), isinstance(y, SymbolString)
    if xs != ys:
        raise InputError("cannot mix SymbolString and plain sequences")
    if xs and x.alphabet != y.alphabet:
        raise InputError("strings are over different alphabets")


def levenshtein(a: Sequence[Hashable], b: Sequence[Hashable]) -> int:
    """Unit-cost edit distance between two sequences of hashable symbols.

    Two-row DP; each row is vectorised, with the insertion chain resolved as a
    running minimum of ``row[j] - j``.
    """
    if len(a) < len(b):
        a, b = b, a
    m = len(b)
    if m == 0:
        return len(a)
    codes: dict = {}
    aa = np.fromiter((codes.setdefault(s, len(codes)) for s in a), dtype=np.int64, count=len(a))
    bb = np.fromiter((codes.setdefault(s, len(codes)) for s in b), dtype=np.int64, count=m)
    ramp = np.arange(m + 1, dtype=np.int64)
    prev = ramp.copy()
    cur = np.empty_like(prev)
    for i, sym in enumerate(aa, start=1):
        cur[0] = i
        np.minimum(prev[:-1] + (bb != sym), prev[1:] + 1, out=cur[1:])
        np.minimum.accumulate(cur - ramp, out=cur)
        cur += ramp
        prev, cur = cur, prev
    return int(prev[m])


def edit_distance(x: StringLike, y: StringLike) -> int:
    """Levenshtein distance (unit-cost insert/delete/substitute)."""
    check_same_alphabet(x, y)
    return levenshtein(as_sequence(x), as_sequence(y))


def edit_distance_oracle(x: StringLike, y: StringLike) -> int:
    """Naive exponential recursion over the three edit operations; test-only."""
    check_same_alphabet(x, y)
    a, b = as_sequence(x), as_sequence(y)
    if len(a) > ORACLE_MAX_LEN or len(b) > ORACLE_MAX_LEN:
        raise InputError(f"oracle is limited to strings of length <= {ORACLE_MAX_LEN}")

    def rec(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        return min(
            rec(i + 1, j) + 1,
            rec(i, j + 1) + 1,
            rec(i + 1, j + 1) + (a[i] != b[j]),
        )

    return rec(0, 0)
