"""
subwarp.dtw
~~~~~~~~~~~

Unconstrained dynamic time warping with full cost and accumulated cost
matrices, kept around because the path simplification reads both.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .path import WarpingPath
from .series import CostFunction, InputError, as_series


def build_cost_matrix(s1, s2, f: CostFunction = CostFunction()) -> np.ndarray:
    """Pairwise local costs, ``C[i-1, j-1] = f.local_cost(s1(i), s2(j))``."""
    s1 = as_series(s1)
    s2 = as_series(s2)
    if s1.dim != s2.dim:
        raise InputError(f"sample dimension mismatch: {s1.dim} vs {s2.dim}")
    C = np.ascontiguousarray(f.pairwise(s1.values, s2.values), dtype=np.float64)
    C.flags.writeable = False
    return C


def accumulate(C: np.ndarray) -> np.ndarray:
    """Accumulated cost matrix for steps (1,1), (1,0), (0,1).

    Cells on one anti-diagonal do not depend on each other, so each
    anti-diagonal is filled in a single vectorized step. Every cell is
    computed as ``C + min(predecessors)``, exactly like the scalar loop.
    """
    C = np.asarray(C, dtype=np.float64)
    if C.ndim != 2 or 0 in C.shape:
        raise InputError(f"cost matrix must be a non-empty 2-D array, got shape {C.shape}")
    n, m = C.shape
    # padded so that row/column 0 hold +inf
    P = np.full((n + 1, m + 1), np.inf)
    P[0, 0] = 0.0
    for k in range(2, n + m + 1):
        # cells (i, j), 1-based, with i + j == k
        i_lo = max(1, k - m)
        i_hi = min(n, k - 1)
        i = np.arange(i_lo, i_hi + 1)
        j = k - i
        best = np.minimum(np.minimum(P[i - 1, j - 1], P[i - 1, j]), P[i, j - 1])
        P[i, j] = C[i - 1, j - 1] + best
    D = P[1:, 1:].copy()
    D.flags.writeable = False
    return D


def backtrack(D: np.ndarray) -> WarpingPath:
    """Optimal warping path from the accumulated cost matrix.

    Ties between predecessors prefer the diagonal step, then the step that
    keeps ``i`` fixed, then the one that keeps ``j`` fixed.
    """
    n, m = D.shape
    i, j = n, m
    rev = [(i, j)]
    while i > 1 or j > 1:
        if i == 1:
            j -= 1
        elif j == 1:
            i -= 1
        else:
            diag = D[i - 2, j - 2]
            left = D[i - 1, j - 2]
            up = D[i - 2, j - 1]
            if diag <= left and diag <= up:
                i -= 1
                j -= 1
            elif left <= up:
                j -= 1
            else:
                i -= 1
        rev.append((i, j))
    rev.reverse()
    return WarpingPath.from_pairs(rev)


@dataclass(frozen=True, eq=False)
class DtwResult:
    path: WarpingPath
    cost: float
    distance: float
    cost_matrix: np.ndarray
    accumulated: np.ndarray
    cost_function: CostFunction

    @property
    def path_length(self) -> int:
        return len(self.path)


def dtw(s1, s2, f: CostFunction = CostFunction()) -> DtwResult:
    """DTW alignment of two series.

    :param s1: first series (:class:`Series` or array-like)
    :param s2: second series
    :param f: local cost function
    :return: :class:`DtwResult` with the optimal path, its cost ``D(n, m)``
        and the distance ``f.cost_to_distance(cost)``
    """
    C = build_cost_matrix(s1, s2, f)
    D = accumulate(C)
    path = backtrack(D)
    cost = float(D[-1, -1])
    return DtwResult(path, cost, f.cost_to_distance(cost), C, D, f)


def dtw_distance(s1, s2, f: CostFunction = CostFunction()) -> float:
    C = build_cost_matrix(s1, s2, f)
    return f.cost_to_distance(float(accumulate(C)[-1, -1]))
