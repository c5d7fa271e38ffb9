from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import InputError


@dataclass(frozen=True)
class QGramParams:
    q: int = 2

    def __post_init__(self):
        if self.q < 1:
            raise InputError("q must be >= 1")

    def label(self) -> str:
        return f"q={self.q}"


@dataclass(frozen=True)
class BatuParams:
    c: int = 2
    j: int = 1

    def __post_init__(self):
        if self.c < 2:
            raise InputError("Batu block parameter c must be >= 2")
        if self.j < 1:
            raise InputError("Batu reduction count j must be >= 1")

    def label(self) -> str:
        return f"c={self.c};j={self.j}"


@dataclass(frozen=True)
class HierAlignParams:
    """``prune_width`` is the number of shift candidates kept per block; ``math.inf`` disables pruning."""

    base_len: int = 1
    prune_width: float = math.inf

    def __post_init__(self):
        b = self.base_len
        if b < 1 or b & (b - 1):
            raise InputError("base_len must be a positive power of two")
        w = self.prune_width
        if not (w == math.inf or (int(w) == w and w >= 1)):
            raise InputError("prune_width must be a positive integer or inf")

    @property
    def pruned(self) -> bool:
        return self.prune_width != math.inf

    def label(self) -> str:
        w = "inf" if not self.pruned else str(int(self.prune_width))
        return f"base={self.base_len};prune={w}"
