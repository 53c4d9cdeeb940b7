"""
subwarp.segmenter
~~~~~~~~~~~~~~~~~

Simplification of a warping path into a few straight segments
(uniform subsequence mappings) whose cost stays within a user tolerance.

Phase 1 splits top-down, RDP style: a segment is replaced by the straight
line between its end points unless the line costs too much more than the
path it replaces, in which case it is split at the point farthest from the
line. Phase 2 greedily merges neighbouring segments, shortest first.

Tolerances are given in distance space (``gamma_abs``, ``gamma_rel``) and
mapped to cost space (``delta_abs``, ``delta_rel``) so that the simplified
distance never exceeds ``d_opt * (1 + gamma_rel) + gamma_abs``.
"""
from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .dtw import DtwResult, dtw
from .path import (
    PathSegment,
    Point,
    WarpingPath,
    linear_path_cost,
    path_segment_cost,
    rasterize_chain,
)
from .series import CostFunction, InputError

#: absolute slack on the tolerance criterion, absorbs summation noise
CRITERION_SLACK = 1e-12

MERGE_CRITERIA = ("local", "global")


@dataclass(frozen=True)
class ToleranceSpec:
    """User-facing tolerances in distance units.

    :param gamma_abs: allowed absolute increase of the distance
    :param gamma_rel: allowed relative increase (0.05 = 5%)
    """

    gamma_abs: float = 0.0
    gamma_rel: float = 0.0

    def __post_init__(self):
        for name in ("gamma_abs", "gamma_rel"):
            v = float(getattr(self, name))
            if not (v >= 0) or math.isinf(v):
                raise InputError(f"{name} must be a finite non-negative number, got {v}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class ToleranceParams:
    """Cost-space tolerances plus the length of the path they apply to."""

    delta_abs: float
    delta_rel: float
    path_length: int


def derive_tolerances(spec: ToleranceSpec, d_opt: float, f: CostFunction, L: int) -> ToleranceParams:
    """Map distance tolerances onto cost tolerances.

    ``delta_abs = phi(d_opt + gamma_abs) - phi(d_opt)`` and
    ``delta_rel = phi(d_opt * gamma_rel) / phi(d_opt)``. With ``d_opt == 0``
    the relative margin is zero and only the absolute one applies.
    """
    if d_opt < 0 or not math.isfinite(d_opt):
        raise InputError(f"optimal distance must be finite and >= 0, got {d_opt}")
    if L < 1:
        raise InputError(f"path length must be >= 1, got {L}")
    phi = f.distance_to_cost
    delta_abs = phi(d_opt + spec.gamma_abs) - phi(d_opt)
    base = phi(d_opt)
    delta_rel = phi(d_opt * spec.gamma_rel) / base if base > 0 else 0.0
    return ToleranceParams(delta_abs, delta_rel, int(L))


def tolerance_check(c_linear: float, c_opt: float, l: int, params: ToleranceParams) -> bool:
    """True when a straight segment of length ``l`` is close enough in cost."""
    limit = max(c_opt + (l / params.path_length) * params.delta_abs,
                c_opt * (1.0 + params.delta_rel))
    return c_linear <= limit + CRITERION_SLACK


def farthest_point(path: WarpingPath, b: int, e: int) -> int:
    """Interior position farthest from the line through ``path(b)`` and ``path(e)``.

    Distances are perpendicular Euclidean distances in the (i, j) plane;
    the smallest position wins ties.
    """
    if e - b < 2:
        raise InputError(f"segment ({b}, {e}) has no interior point to split at")
    if b < 1 or e > len(path):
        raise InputError(f"segment ({b}, {e}) outside path of length {len(path)}")
    pts = path.pairs[b - 1:e]
    p0 = pts[0]
    di, dj = pts[-1] - p0
    rel = pts[1:-1] - p0
    # |cross| is the distance times a constant, exact in integers
    cross = np.abs(rel[:, 0] * dj - rel[:, 1] * di)
    return b + 1 + int(np.argmax(cross))


@dataclass(frozen=True, eq=False)
class SimplifiedPath:
    """Key points kept from a warping path, and the segments between them.

    ``key_indices`` are 1-based positions on ``path``; consecutive key
    points delimit one segment and share their end point.
    """

    path: WarpingPath
    key_indices: Tuple[int, ...]
    segments: Tuple[PathSegment, ...]
    start_cost: float

    @property
    def key_points(self) -> List[Point]:
        return [self.path.point(k) for k in self.key_indices]

    def __len__(self):
        return len(self.segments)

    @property
    def linear_cost(self) -> float:
        """Cost of the rasterized simplified path, counting the start pair once."""
        return math.fsum([self.start_cost] + [s.linear_cost for s in self.segments])

    @property
    def optimal_cost(self) -> float:
        return math.fsum([self.start_cost] + [s.optimal_cost for s in self.segments])

    def rasterize(self) -> WarpingPath:
        return rasterize_chain(self.key_points)


def _segment(path: WarpingPath, C: np.ndarray, b: int, e: int) -> PathSegment:
    return PathSegment(
        b, e, path.point(b), path.point(e),
        optimal_cost=path_segment_cost(path, C, b, e),
        linear_cost=linear_path_cost(path, C, b, e),
    )


def _build(path: WarpingPath, C: np.ndarray, keys: Sequence[int]) -> SimplifiedPath:
    keys = tuple(sorted(set(int(k) for k in keys)))
    segments = tuple(_segment(path, C, b, e) for b, e in zip(keys[:-1], keys[1:]))
    i, j = path.point(1)
    return SimplifiedPath(path, keys, segments, float(C[i - 1, j - 1]))


def from_key_indices(path: WarpingPath, C: np.ndarray, keys: Sequence[int]) -> SimplifiedPath:
    """Wrap an arbitrary key-position chain (must include 1 and ``len(path)``)."""
    keys = sorted(set(int(k) for k in keys))
    if not keys or keys[0] != 1 or keys[-1] != len(path):
        raise InputError("key positions must start at 1 and end at the path length")
    return _build(path, C, keys)


def split_phase(path: WarpingPath, C: np.ndarray, params: ToleranceParams) -> SimplifiedPath:
    """Top-down splitting of ``path`` into segments that pass the criterion.

    Segments are taken from a LIFO work list; the outcome does not depend on
    the order because each accept/split decision only looks at its own
    segment.

    :param path: warping path to simplify (optimal, or any valid path)
    :param C: cost matrix the path lives in
    :param params: cost-space tolerances, see :func:`derive_tolerances`
    """
    L = len(path)
    if L == 1:
        return _build(path, C, [1])
    keys = set()
    work = [(1, L)]
    while work:
        b, e = work.pop()
        c_lin = linear_path_cost(path, C, b, e)
        c_opt = path_segment_cost(path, C, b, e)
        if tolerance_check(c_lin, c_opt, e - b, params):
            keys.update((b, e))
        elif e - b < 2:
            # unreachable for optimal paths, where a unit step has c_lin == c_opt
            warnings.warn(f"segment ({b}, {e}) fails the criterion but cannot be split; kept as is",
                          RuntimeWarning, stacklevel=2)
            keys.update((b, e))
        else:
            s = farthest_point(path, b, e)
            work.append((s, e))
            work.append((b, s))
    return _build(path, C, keys)


def merge_phase(path: WarpingPath, C: np.ndarray, simplified: SimplifiedPath,
                params: ToleranceParams, criterion: str = "local") -> SimplifiedPath:
    """Merge adjacent segments, shortest pairs first.

    A pair of neighbouring segments ``(b, m)``, ``(m, e)`` is keyed by the
    length of its shorter half (ties: smaller ``b``). With the ``"local"``
    criterion the merged segment ``(b, e)`` must pass
    :func:`tolerance_check`; with ``"global"`` the whole simplified path
    must stay within ``c_opt * (1 + delta_rel) + delta_abs`` instead.
    Entries whose points were removed in the meantime are dropped on pop.
    """
    if criterion not in MERGE_CRITERIA:
        raise InputError(f"merge criterion must be one of {MERGE_CRITERIA}, got {criterion!r}")
    keys = list(simplified.key_indices)
    if len(keys) < 3:
        return simplified
    L = params.path_length
    alive = set(keys)
    prev = {k: p for p, k in zip(keys[:-1], keys[1:])}
    nxt = {p: k for p, k in zip(keys[:-1], keys[1:])}

    lin = {(s.b, s.e): s.linear_cost for s in simplified.segments}
    if criterion == "global":
        budget = path.total_cost(C) * (1.0 + params.delta_rel) + params.delta_abs
        total = simplified.linear_cost

    heap = []
    for b, m, e in zip(keys[:-2], keys[1:-1], keys[2:]):
        heap.append((min(m - b, e - m), b, m, e))
    heapq.heapify(heap)

    while heap:
        _, b, m, e = heapq.heappop(heap)
        if b not in alive or m not in alive or e not in alive:
            continue
        c_lin = linear_path_cost(path, C, b, e)
        if criterion == "local":
            c_opt = path_segment_cost(path, C, b, e)
            ok = tolerance_check(c_lin, c_opt, e - b, params)
        else:
            new_total = total - lin[(b, m)] - lin[(m, e)] + c_lin
            ok = new_total <= budget + CRITERION_SLACK
        if not ok:
            continue
        if criterion == "global":
            total = new_total
        alive.discard(m)
        nxt[b] = e
        prev[e] = b
        del prev[m], nxt[m]
        lin[(b, e)] = c_lin
        if b > 1:
            p = prev[b]
            heapq.heappush(heap, (min(b - p, e - b), p, b, e))
        if e < L:
            n = nxt[e]
            heapq.heappush(heap, (min(e - b, n - e), b, e, n))
    return _build(path, C, alive)


@dataclass(frozen=True, eq=False)
class DswResult:
    """Outcome of a simplification run.

    ``distance`` is measured along the rasterized simplified path and is
    bounded by ``reference_distance * (1 + gamma_rel) + gamma_abs``, where
    ``reference_distance`` is the distance along the input path (the DTW
    distance when the path came from :func:`~subwarp.dtw.dtw`).
    """

    simplified: SimplifiedPath
    phase1: SimplifiedPath
    spec: ToleranceSpec
    params: ToleranceParams
    cost_function: CostFunction
    reference_distance: float
    cost: float
    distance: float
    dtw: Optional[DtwResult] = None

    @property
    def bound(self) -> float:
        return self.reference_distance * (1.0 + self.spec.gamma_rel) + self.spec.gamma_abs


def _run(path, C, f, d_ref, spec, merge_criterion, dtw_result=None) -> DswResult:
    params = derive_tolerances(spec, d_ref, f, len(path))
    phase1 = split_phase(path, C, params)
    merged = merge_phase(path, C, phase1, params, merge_criterion)
    cost = merged.rasterize().total_cost(C)
    return DswResult(merged, phase1, spec, params, f, d_ref, cost, f.cost_to_distance(cost), dtw_result)


def simplify_result(result: DtwResult, spec: ToleranceSpec = ToleranceSpec(),
                    merge_criterion: str = "local") -> DswResult:
    """Simplify the optimal path of an existing :class:`~subwarp.dtw.DtwResult`."""
    return _run(result.path, result.cost_matrix, result.cost_function, result.distance,
                spec, merge_criterion, result)


def simplify_path(path: WarpingPath, C: np.ndarray, f: CostFunction = CostFunction(),
                  spec: ToleranceSpec = ToleranceSpec(), merge_criterion: str = "local") -> DswResult:
    """Simplify an externally supplied warping path (e.g. from constrained DTW).

    The bound then holds relative to the distance along ``path`` itself.
    """
    C = np.asarray(C, dtype=np.float64)
    violation = path.validate(*C.shape)
    if violation is not None:
        raise InputError(f"invalid warping path: {violation}")
    d_ref = f.cost_to_distance(path.total_cost(C))
    return _run(path, C, f, d_ref, spec, merge_criterion)


def simplify(s1, s2, f: CostFunction = CostFunction(), spec: ToleranceSpec = ToleranceSpec(),
             merge_criterion: str = "local") -> DswResult:
    """DTW followed by split and merge simplification of the optimal path.

    >>> r = simplify([0, 1, 2, 3], [0, 1, 2, 3])
    >>> r.simplified.key_points, r.distance
    ([(1, 1), (4, 4)], 0.0)
    """
    return simplify_result(dtw(s1, s2, f), spec, merge_criterion)
