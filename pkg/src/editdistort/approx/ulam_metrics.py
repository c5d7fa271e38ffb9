"""Distances defined on Ulam strings (every symbol occurs at most once)."""
from __future__ import annotations

import numpy as np

from ..errors import PreconditionError
from ..strcore import SymbolString, as_sequence, check_same_alphabet
from ..ulam import ExpandedString, is_ulam


def _ulam_pair(P, Q) -> tuple[tuple, tuple]:
    if isinstance(P, SymbolString) or isinstance(Q, SymbolString):
        check_same_alphabet(P, Q)
    a = P.grams if isinstance(P, ExpandedString) else as_sequence(P)
    b = Q.grams if isinstance(Q, ExpandedString) else as_sequence(Q)
    if not is_ulam(a) or not is_ulam(b):
        raise PreconditionError("input has a repeated symbol; expand it to t-grams first")
    return a, b


def _positions(a: tuple, b: tuple) -> tuple[np.ndarray, np.ndarray]:
    """Positions of every symbol of a ∪ b in each string (NaN when absent)."""
    union = {s: i for i, s in enumerate(dict.fromkeys(a + b))}
    pa = np.full(len(union), np.nan)
    pb = np.full(len(union), np.nan)
    pa[[union[s] for s in a]] = np.arange(len(a))
    pb[[union[s] for s in b]] = np.arange(len(b))
    return pa, pb


def _inverse_gaps(pos: np.ndarray) -> np.ndarray:
    # T[a, b] = 1 / (pos[b] - pos[a]); 0 on the diagonal or when either symbol is missing.
    gap = pos[None, :] - pos[:, None]
    ok = np.isfinite(gap) & (gap != 0)
    out = np.zeros_like(gap)
    np.divide(1.0, gap, out=out, where=ok)
    return out


def charikar_distance(P, Q) -> float:
    """Sum over ordered symbol pairs (a, b) of |1/(P⁻¹[b]−P⁻¹[a]) − 1/(Q⁻¹[b]−Q⁻¹[a])|."""
    a, b = _ulam_pair(P, Q)
    if not a and not b:
        return 0.0
    pa, pb = _positions(a, b)
    return float(np.abs(_inverse_gaps(pa) - _inverse_gaps(pb)).sum())


def dyadic_scales(length: int) -> list[int]:
    scales, w = [], 1
    while w <= length:
        scales.append(w)
        w *= 2
    return scales


def andoni09_distance(P, Q) -> float:
    """Predecessor-window distance between two Ulam strings.

    For a symbol present in both strings, compare the sets of the w symbols
    preceding it, w = 1, 2, 4, ...; its score is the largest normalised
    symmetric difference |Δ|/(2w). The distance adds one per symbol present in
    only one string.
    """
    a, b = _ulam_pair(P, Q)
    pos_b = {s: i for i, s in enumerate(b)}
    common = [s for s in a if s in pos_b]
    only = len(a) + len(b) - 2 * len(common)
    if not common:
        return float(only)
    pa = np.array([i for i, s in enumerate(a) if s in pos_b], dtype=np.int64)
    pb = np.array([pos_b[s] for s in common], dtype=np.int64)
    # b' lies in both windows of a iff it precedes a in both strings within distance w.
    da = pa[:, None] - pa[None, :]
    db = pb[:, None] - pb[None, :]
    reach = np.where((da >= 1) & (db >= 1), np.maximum(da, db), np.iinfo(np.int64).max)
    best = np.zeros(len(common))
    for w in dyadic_scales(max(len(a), len(b))):
        inter = (reach <= w).sum(axis=1)
        sym_diff = np.minimum(pa, w) + np.minimum(pb, w) - 2 * inter
        np.maximum(best, sym_diff / (2 * w), out=best)
    return float(best.sum() + only)
