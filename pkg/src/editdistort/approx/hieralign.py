"""Hierarchical block-shift alignment cost (Andoni 2010 style, binary split).

With x, y padded to a power of two N, the cost of aligning block x[i, i+L)
under absolute shift s is

    E(i, 1, s) = [x[i] != y[i+s]]                     (out of range: mismatch)
    E(i, L, s) = Σ_{h∈{0,1}} min_{s'∈[-L, L]} |s' - s| + E(i + hL/2, L/2, s')

and the distance is E(0, N, 0). A block at level L is only ever queried with
shifts in [-2L, 2L], so each level is a dense (blocks × shifts) table.
Without pruning the inner min is an L1 distance transform, done with two
running minima; with pruning each parent shift keeps only its ``prune_width``
nearest child shifts.
"""
from __future__ import annotations

import numpy as np

from ..strcore import StringLike, as_sequence, check_same_alphabet
from .params import HierAlignParams

_PAD = -1  # sentinel padding, equal on both sides
_OUT = -2  # out-of-range position of y, never equal to anything in x


def _next_pow2(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


def _encode_pair(a: tuple, b: tuple) -> tuple[np.ndarray, np.ndarray]:
    codes: dict = {}
    xa = np.array([codes.setdefault(s, len(codes)) for s in a], dtype=np.int64)
    yb = np.array([codes.setdefault(s, len(codes)) for s in b], dtype=np.int64)
    return xa, yb


def _base_costs(x: np.ndarray, y: np.ndarray, block: int, reach: int) -> np.ndarray:
    """Mismatch counts of every length-``block`` block for shifts in [-reach, reach]."""
    n = len(x)
    yext = np.concatenate([np.full(reach, _OUT), y, np.full(reach, _OUT)])
    shifts = np.arange(-reach, reach + 1)
    shifted = yext[np.arange(n)[None, :] + shifts[:, None] + reach]
    mism = (shifted != x[None, :]).reshape(len(shifts), n // block, block).sum(axis=2)
    return mism.T.astype(float)


def _distance_transform(child: np.ndarray, child_reach: int, parent_reach: int) -> np.ndarray:
    # out[:, s] = min_{s'} |s' - s| + child[:, s'] over the grid [-R, R].
    R = max(child_reach, parent_reach)
    grid = np.arange(-R, R + 1, dtype=float)
    f = np.full((child.shape[0], len(grid)), np.inf)
    f[:, R - child_reach:R + child_reach + 1] = child
    fwd = np.minimum.accumulate(f - grid, axis=1) + grid
    bwd = np.minimum.accumulate((f + grid)[:, ::-1], axis=1)[:, ::-1] - grid
    out = np.minimum(fwd, bwd)
    return out[:, R - parent_reach:R + parent_reach + 1]


def _pruned_min(child: np.ndarray, child_reach: int, parent_reach: int, width: int) -> np.ndarray:
    child_shifts = np.arange(-child_reach, child_reach + 1)
    parent_shifts = np.arange(-parent_reach, parent_reach + 1)
    width = min(width, len(child_shifts))
    dist = np.abs(child_shifts[None, :] - parent_shifts[:, None])
    # nearest first, ties broken towards the smaller shift
    order = np.lexsort((np.broadcast_to(child_shifts, dist.shape), dist), axis=1)[:, :width]
    move = np.take_along_axis(dist, order, axis=1)
    return (child[:, order] + move[None, :, :]).min(axis=2)


def andoni10_distance(x: StringLike, y: StringLike, p: HierAlignParams = HierAlignParams()) -> int:
    """Hierarchical alignment cost E(0, N, 0); zero iff the padded strings are equal.

    Inputs of unequal length are sentinel-padded to a common power of two.
    The cost is directed: no symmetry in (x, y) is assumed.
    """
    check_same_alphabet(x, y)
    a, b = as_sequence(x), as_sequence(y)
    n = max(_next_pow2(max(len(a), len(b), 1)), p.base_len)
    xa, yb = _encode_pair(a, b)
    xs = np.full(n, _PAD, dtype=np.int64)
    ys = np.full(n, _PAD, dtype=np.int64)
    xs[:len(a)] = xa
    ys[:len(b)] = yb

    block = p.base_len
    if block == n:
        return int((xs != ys).sum())
    child = _base_costs(xs, ys, block, 2 * block)
    while True:
        length = 2 * block
        child_reach = length
        parent_reach = 0 if length == n else 2 * length
        if p.pruned:
            best = _pruned_min(child, child_reach, parent_reach, int(p.prune_width))
        else:
            best = _distance_transform(child, child_reach, parent_reach)
        child = best.reshape(-1, 2, best.shape[1]).sum(axis=1)
        block = length
        if block == n:
            return int(child[0, 0])
