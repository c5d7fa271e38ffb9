"""Empirical distortion over finite sample sets and the bound-to-distortion conversion."""
from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = [
    "RatioSample",
    "DistortionReport",
    "BoundDistortion",
    "empirical_distortion",
    "bound_to_distortion",
    "log_grid",
    "baryossef_bounds",
    "sokolov_bounds",
]

GRID_POINTS = 256
# slack for float noise in the slope monotonicity checks
_MONO_RTOL = 1e-12


@dataclass(frozen=True)
class RatioSample:
    exact: float
    approx: float

    def __post_init__(self):
        if self.exact < 0 or self.approx < 0:
            raise InputError("distances must be non-negative")

    @property
    def ratio(self) -> float | None:
        return self.approx / self.exact if self.exact > 0 else None


@dataclass(frozen=True)
class DistortionReport:
    K: float
    K_prime: float
    min_ratio: float
    max_ratio: float
    mean_ratio: float
    theta: float
    n_used: int
    n_excluded: int

    @property
    def finite(self) -> bool:
        return math.isfinite(self.K)


def empirical_distortion(samples: Iterable[RatioSample], theta: float = 1.0) -> DistortionReport:
    """Smallest K with some K' such that exact <= K'·approx <= K·exact on every sample.

    Only samples with ``exact >= theta`` take part. A pair with exact = approx = 0
    is counted but constrains nothing; a pair where exactly one side is zero
    makes K infinite.
    """
    if theta < 0:
        raise InputError("theta must be non-negative")
    samples = list(samples)
    used = [s for s in samples if s.exact >= theta]
    if not used:
        raise InputError(f"no sample has exact distance >= theta={theta}")
    n_used, n_excluded = len(used), len(samples) - len(used)

    exact = np.array([s.exact for s in used], dtype=float)
    approx = np.array([s.approx for s in used], dtype=float)
    both_zero = (exact == 0) & (approx == 0)
    exact, approx = exact[~both_zero], approx[~both_zero]
    if len(exact) == 0:
        return DistortionReport(1.0, 1.0, math.nan, math.nan, math.nan, theta, n_used, n_excluded)
    pos = exact > 0
    ratios = approx[pos] / exact[pos]
    lo = float(ratios.min()) if ratios.size else math.nan
    if pos.all():
        hi, mean = float(ratios.max()), float(ratios.mean())
    else:
        # approx > 0 at exact = 0: nothing bounds K'·approx by K·0
        hi = mean = math.inf
    k_prime = 1 / lo if lo > 0 else (math.inf if lo == 0 else math.nan)
    K = hi / lo if pos.all() and lo > 0 else math.inf
    return DistortionReport(K, k_prime, lo, hi, mean, theta, n_used, n_excluded)


@dataclass(frozen=True)
class BoundDistortion:
    """``K`` is None when the slope monotonicity check failed."""

    K: float | None
    verified: bool
    violation: str | None = None


def log_grid(theta: float, n: float, points: int = GRID_POINTS) -> np.ndarray:
    if theta <= 0 or n < theta:
        raise InputError("log grid needs 0 < theta <= n")
    grid = np.geomspace(theta, n, points)
    grid[0], grid[-1] = theta, n
    return np.maximum.accumulate(grid)


def _non_increasing(v: np.ndarray) -> bool:
    return bool(np.all(np.diff(v) <= _MONO_RTOL * np.abs(v[:-1])))


def bound_to_distortion(
    u: Callable[[float], float],
    l: Callable[[float], float],
    theta: float,
    grid: Sequence[float],
) -> BoundDistortion:
    """Distortion K = u(θ)/l(θ) implied by l(d) <= approx <= u(d) for d >= θ.

    Valid only if u(d)/d is non-increasing and l(d)/d non-decreasing; both are
    checked on ``grid`` before the value is returned.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise InputError("grid must be non-empty")
    if np.any(np.diff(grid) < 0):
        raise InputError("grid must be sorted")
    if not math.isclose(grid[0], theta, rel_tol=1e-12):
        raise InputError("grid must start at theta")
    lo = l(theta)
    if lo <= 0:
        return BoundDistortion(math.inf, True)
    upper_slope = np.array([u(d) / d for d in grid])
    lower_slope = np.array([l(d) / d for d in grid])
    if not _non_increasing(upper_slope):
        return BoundDistortion(None, False, "u(d)/d increases on the grid")
    if not _non_increasing(-lower_slope):
        return BoundDistortion(None, False, "l(d)/d decreases on the grid")
    return BoundDistortion(u(theta) / lo, True)


def baryossef_bounds(n: float) -> tuple[Callable[[float], float], Callable[[float], float]]:
    """(u, l) with 4d/13 <= approx <= 2(dn)^(2/3), at the tuned q = n^(2/3)/(2k^(1/3))."""
    return (lambda d: 2 * (d * n) ** (2 / 3)), (lambda d: 4 * d / 13)


def sokolov_bounds(n: float) -> tuple[Callable[[float], float], Callable[[float], float]]:
    """(u, l) with 2(d-5)/n <= approx <= 2d(n+2)/n; the lower bound is vacuous for d <= 5."""
    return (lambda d: 2 * d * (n + 2) / n), (lambda d: 2 * (d - 5) / n)
