"""q-gram profile distances (Bar-Yossef style L1, Sokolov style padded and normalised)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import InputError
from ..strcore import StringLike, as_sequence, check_same_alphabet
from .params import QGramParams


class _Pad:
    # Sentinel symbol outside every alphabet.
    __slots__ = ()

    def __repr__(self):
        return "⊥"


PAD = _Pad()


@dataclass(frozen=True)
class QGramProfile:
    counts: dict
    q: int
    source_length: int

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())


def _profile(seq: tuple, q: int) -> Counter:
    return Counter(seq[i:i + q] for i in range(len(seq) - q + 1))


def qgram_profile(x: StringLike, q: int) -> QGramProfile:
    if q < 1:
        raise InputError("q must be >= 1")
    seq = as_sequence(x)
    return QGramProfile(dict(_profile(seq, q)), q, len(seq))


def _l1(a: Counter, b: Counter) -> int:
    return sum(abs(a.get(g, 0) - b.get(g, 0)) for g in a.keys() | b.keys())


def baryossef_distance(x: StringLike, y: StringLike, p: QGramParams = QGramParams()) -> int:
    """L1 distance between the q-gram count vectors of ``x`` and ``y``."""
    check_same_alphabet(x, y)
    return _l1(_profile(as_sequence(x), p.q), _profile(as_sequence(y), p.q))


def sokolov_distance(x: StringLike, y: StringLike, p: QGramParams = QGramParams()) -> float:
    """Padded q-gram L1 distance divided by the common length n.

    Both strings get q-1 sentinels on each side so every symbol, including the
    ends, is covered by exactly q grams.
    """
    check_same_alphabet(x, y)
    a, b = as_sequence(x), as_sequence(y)
    if len(a) != len(b):
        raise InputError(f"sokolov_distance needs equal lengths, got {len(a)} and {len(b)}")
    n = len(a)
    if n == 0:
        raise InputError("sokolov_distance needs non-empty strings")
    pad = (PAD,) * (p.q - 1)
    return _l1(_profile(pad + a + pad, p.q), _profile(pad + b + pad, p.q)) / n
