"""Closed-form refined distortions of the six approximation methods.

``lg`` is base 2 and ``ln`` natural throughout. Values are floats, with
``math.inf`` for unbounded distortion.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "ALGORITHMS",
    "THETA_DEPENDENT",
    "TheoryPoint",
    "iterated_log",
    "batu_c_rule",
    "theory_distortion",
    "theory_curves",
    "charikar_ulam_distortion",
    "ANDONI09_ULAM_DISTORTION",
]

ALGORITHMS = ("baryossef", "batu", "charikar", "sokolov", "andoni09", "andoni10")
THETA_DEPENDENT = frozenset({"baryossef", "charikar", "sokolov"})

# 50 · 17 · 2 for Ulam strings; general strings pay a further 2n for t-gram expansion.
ANDONI09_ULAM_DISTORTION = 1700.0


def iterated_log(base: float, x: float) -> int:
    """Fewest applications of log_base that bring x to <= 1 (0 if x <= 1 already)."""
    if base <= 1:
        raise InputError("iterated log base must exceed 1")
    log = math.log2 if base == 2 else (lambda v: math.log(v) / math.log(base))
    i = 0
    while x > 1:
        x = log(x)
        i += 1
    return i


def batu_c_rule(n: float) -> float:
    """c = max{lg lg n / lg lg lg n, 2}, kept real-valued."""
    llg = math.log2(math.log2(n)) if n > 2 else 0.0
    if llg <= 1:  # lg lg lg n <= 0, the ratio is meaningless; clamp
        return 2.0
    return max(llg / math.log2(llg), 2.0)


def charikar_ulam_distortion(n: float, theta: float) -> float:
    return 24 * (1 + math.log(n)) / max(1.0, theta)


def _baryossef(n, theta):
    if theta == 0:
        return math.inf
    return 13 / (2 * theta ** (1 / 3)) * n ** (2 / 3)


def _batu_limit(k, c):
    return 4 * (2 * c - 1) * (math.log2((2 * c - 3) * k) + 1 + (c - 1) ** 2 / c)


def _batu_single(k, c):
    return (2 * c - 1) * (4 * c + (8 * (2 * c - 3) * k) ** (c - 1)) / c


def _sokolov(n, theta):
    if theta <= 5:
        return math.inf
    return (n * theta + 2) / (theta - 5)


def theory_distortion(
    algorithm: str,
    n: float,
    theta: float | None = None,
    k: int | None = None,
    c: float | None = None,
    j: int | None = None,
) -> float:
    """Refined distortion of ``algorithm`` for strings of length n.

    Batu: ``j=1`` uses the single-reduction bound (c defaults to 2); ``j=None``
    is the large-j limit with c from :func:`batu_c_rule` unless given.
    """
    if algorithm not in ALGORITHMS:
        raise InputError(f"unknown algorithm {algorithm!r}")
    if n < 2:
        raise InputError("n must be >= 2")
    if algorithm in THETA_DEPENDENT:
        if theta is None:
            raise InputError(f"{algorithm} needs theta")
        if not 0 <= theta <= n:
            raise InputError("theta must lie in [0, n]")
    if algorithm == "baryossef":
        return _baryossef(n, theta)
    if algorithm == "charikar":
        return 2 * n * charikar_ulam_distortion(n, theta)
    if algorithm == "sokolov":
        return _sokolov(n, theta)
    if algorithm == "andoni09":
        return 2 * n * ANDONI09_ULAM_DISTORTION
    if algorithm == "andoni10":
        return 12 * math.log2(n)
    # batu
    if k is None or k < 1:
        raise InputError("batu needs k >= 1 (bits per symbol)")
    if j is None:
        c = batu_c_rule(n) if c is None else c
        if c < 2:
            raise InputError("batu needs c >= 2")
        return _batu_limit(k, c)
    if j != 1:
        raise InputError("batu distortion is available for j=1 or the large-j limit (j=None)")
    c = 2 if c is None else c
    if c < 2 or int(c) != c:
        raise InputError("batu with j=1 needs an integer c >= 2")
    return _batu_single(k, c)


@dataclass(frozen=True)
class TheoryPoint:
    algorithm: str
    n: float
    theta: float | None
    k: int | None
    c: float | None
    j: int | None
    value: float


def theory_curves(
    n_grid: Iterable[float],
    theta: float | str = "n",
    k: int = 2,
    c: float | None = None,
    batu_j: int | None = None,
) -> list[TheoryPoint]:
    """All six curves on ``n_grid``; ``theta="n"`` sets θ = n for the θ-dependent rows."""
    grid = list(n_grid)
    if not grid:
        raise InputError("n grid must be non-empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InputError("n grid must be increasing")
    if isinstance(theta, str) and theta != "n":
        raise InputError("theta must be a number or 'n'")
    points = []
    for n in grid:
        for alg in ALGORITHMS:
            th = (n if theta == "n" else float(theta)) if alg in THETA_DEPENDENT else None
            if alg == "batu":
                cc = c if c is not None else (batu_c_rule(n) if batu_j is None else 2)
                val = theory_distortion(alg, n, k=k, c=cc, j=batu_j)
                points.append(TheoryPoint(alg, n, None, k, cc, batu_j, val))
            else:
                points.append(TheoryPoint(alg, n, th, None, None, None, theory_distortion(alg, n, th)))
    return points
