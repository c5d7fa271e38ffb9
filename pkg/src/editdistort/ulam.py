"""Ulam-condition checks and alphabet expansion to t-gram symbols.

A general string becomes an Ulam string (all symbols distinct) by replacing it
with its sequence of overlapping t-grams. Gram identity is by content, so a
substring shared by ``x`` and ``y`` maps to the same expanded symbol.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, PreconditionError
from .strcore import StringLike, as_sequence

__all__ = [
    "ExpandedString",
    "is_ulam",
    "grams_distinct",
    "minimal_order",
    "minimal_expansion_order",
    "expand",
    "expand_pair",
]


@dataclass(frozen=True)
class ExpandedString:
    grams: tuple[tuple, ...]
    t: int
    source_length: int

    def __post_init__(self):
        if self.source_length < self.t:
            raise InputError(f"expansion order {self.t} exceeds string length {self.source_length}")
        if len(self.grams) != self.source_length - self.t + 1:
            raise InputError("gram count does not match source length")
        if len(set(self.grams)) != len(self.grams):
            raise PreconditionError("t-grams are not pairwise distinct")

    def __len__(self) -> int:
        return len(self.grams)

    def __iter__(self):
        return iter(self.grams)


def is_ulam(x: StringLike | ExpandedString) -> bool:
    seq = x.grams if isinstance(x, ExpandedString) else as_sequence(x)
    return len(set(seq)) == len(seq)


def _grams(seq: tuple, t: int) -> list[tuple]:
    return [seq[i:i + t] for i in range(len(seq) - t + 1)]


def grams_distinct(x: StringLike, t: int) -> bool:
    """True iff the t-grams of ``x`` are pairwise distinct (vacuous when t > |x|)."""
    grams = _grams(as_sequence(x), t)
    return len(set(grams)) == len(grams)


def minimal_order(x: StringLike) -> int:
    """Smallest t making the t-grams of ``x`` distinct.

    Distinctness is monotone in t (a repeated (t+1)-gram contains a repeated
    t-gram), so a binary search over [1, |x|] suffices.
    """
    seq = as_sequence(x)
    if not seq:
        raise InputError("expansion order is undefined for the empty string")
    lo, hi = 1, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if grams_distinct(seq, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def minimal_expansion_order(x: StringLike, y: StringLike) -> int:
    """Smallest t for which both strings have pairwise-distinct t-grams."""
    if len(x) == 0 or len(y) == 0:
        raise InputError("expansion order needs non-empty strings")
    return max(minimal_order(x), minimal_order(y))


def expand(x: StringLike, t: int) -> ExpandedString:
    seq = as_sequence(x)
    if t < 1:
        raise InputError("expansion order must be positive")
    if t > len(seq):
        raise InputError(f"expansion order {t} exceeds string length {len(seq)}")
    return ExpandedString(tuple(_grams(seq, t)), t, len(seq))


def expand_pair(x: StringLike, y: StringLike) -> tuple[ExpandedString, ExpandedString, int]:
    """Expand both strings with their joint minimal order; returns (X, Y, t)."""
    t = minimal_expansion_order(x, y)
    return expand(x, t), expand(y, t), t
