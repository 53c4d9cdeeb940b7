"""
subwarp.path
~~~~~~~~~~~~

Warping paths over the (i, j) index lattice: validity checks, segment
costs and Bresenham rasterization of straight segments.

All index pairs and path positions are 1-based.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .series import InputError

Point = Tuple[int, int]

STEPS = ((1, 1), (1, 0), (0, 1))


@dataclass(frozen=True, eq=False)
class WarpingPath:
    """Sequence of 1-based ``(i, j)`` index pairs.

    The constructor only checks the array shape; call :meth:`validate` (or
    :func:`validate_path`) for the boundary/continuity/monotonicity rules.
    """

    pairs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.pairs, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise InputError(f"path must be a non-empty (L, 2) array, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "pairs", arr)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Point]) -> "WarpingPath":
        return cls(np.array(list(pairs), dtype=np.int64).reshape(-1, 2))

    def __len__(self):
        return self.pairs.shape[0]

    def __iter__(self) -> Iterator[Point]:
        for i, j in self.pairs.tolist():
            yield (i, j)

    def __eq__(self, other):
        if not isinstance(other, WarpingPath):
            return NotImplemented
        return np.array_equal(self.pairs, other.pairs)

    def __hash__(self):
        return hash(self.pairs.tobytes())

    def __repr__(self):
        L = len(self)
        if L <= 6:
            return f"WarpingPath({self.to_list()})"
        return f"WarpingPath([{self.point(1)}, {self.point(2)}, ..., {self.point(L)}], L={L})"

    def point(self, k: int) -> Point:
        """The ``k``-th pair of the path, ``k`` counted from 1."""
        if not 1 <= k <= len(self):
            raise InputError(f"path position {k} outside 1..{len(self)}")
        i, j = self.pairs[k - 1]
        return (int(i), int(j))

    def to_list(self) -> List[Point]:
        return [tuple(p) for p in self.pairs.tolist()]

    @property
    def shape(self) -> Tuple[int, int]:
        """``(n, m)`` implied by the last pair."""
        return self.point(len(self))

    def costs(self, C: np.ndarray) -> np.ndarray:
        """Local cost of every pair on the path."""
        return C[self.pairs[:, 0] - 1, self.pairs[:, 1] - 1]

    def total_cost(self, C: np.ndarray) -> float:
        return math.fsum(self.costs(C))

    def corner_count(self) -> int:
        """Number of interior points where the step direction changes."""
        if len(self) < 3:
            return 0
        steps = np.diff(self.pairs, axis=0)
        changed = np.any(steps[1:] != steps[:-1], axis=1)
        return int(np.count_nonzero(changed))

    def validate(self, n: Optional[int] = None, m: Optional[int] = None) -> Optional["PathViolation"]:
        if n is None or m is None:
            n, m = self.shape
        return validate_path(self, n, m)


@dataclass(frozen=True)
class PathViolation:
    """First violated warping-path condition.

    ``condition`` is one of ``"boundary"``, ``"continuity"`` or
    ``"monotonicity"``; ``position`` is the 1-based path position.
    """

    condition: str
    position: int
    message: str

    def __str__(self):
        return f"{self.condition} violation at position {self.position}: {self.message}"


def validate_path(path, n: int, m: int) -> Optional[PathViolation]:
    """Check a path against the three warping-path conditions.

    Returns ``None`` when the path is valid for an ``n`` x ``m`` grid,
    otherwise the first violation in path order. Steps are restricted to
    ``(1, 1)``, ``(1, 0)`` and ``(0, 1)``; a repeated pair or a jump counts
    as a continuity violation, any decreasing index as a monotonicity one.
    """
    pairs = path.pairs if isinstance(path, WarpingPath) else np.asarray(list(path), dtype=np.int64).reshape(-1, 2)
    L = pairs.shape[0]
    if L == 0:
        return PathViolation("boundary", 1, "empty path")
    if tuple(pairs[0]) != (1, 1):
        return PathViolation("boundary", 1, f"path starts at {tuple(map(int, pairs[0]))}, expected (1, 1)")
    for k in range(1, L):
        di = int(pairs[k, 0] - pairs[k - 1, 0])
        dj = int(pairs[k, 1] - pairs[k - 1, 1])
        if di < 0 or dj < 0:
            return PathViolation("monotonicity", k + 1, f"step ({di}, {dj}) decreases an index")
        if (di, dj) not in STEPS:
            return PathViolation("continuity", k + 1, f"step ({di}, {dj}) is not a unit step")
        i, j = int(pairs[k, 0]), int(pairs[k, 1])
        if i > n or j > m:
            return PathViolation("boundary", k + 1, f"pair ({i}, {j}) outside the {n}x{m} grid")
    if tuple(pairs[-1]) != (n, m):
        return PathViolation("boundary", L, f"path ends at {tuple(map(int, pairs[-1]))}, expected ({n}, {m})")
    return None


def _check_range(path: WarpingPath, b: int, e: int):
    if not 1 <= b < e <= len(path):
        raise InputError(f"need 1 <= b < e <= {len(path)}, got b={b}, e={e}")


def optimal_path_cost(path: WarpingPath, D: np.ndarray, b: int, e: int) -> float:
    """Cost of the path between positions ``b`` and ``e`` read off ``D``.

    The pair at ``b`` is excluded, the pair at ``e`` included. Only equals
    the summed local costs when ``path`` is the path ``D`` was built for.
    """
    _check_range(path, b, e)
    ib, jb = path.point(b)
    ie, je = path.point(e)
    return float(D[ie - 1, je - 1] - D[ib - 1, jb - 1])


def path_segment_cost(path: WarpingPath, C: np.ndarray, b: int, e: int) -> float:
    """Summed local cost of path positions ``b+1 .. e`` (correctly rounded)."""
    _check_range(path, b, e)
    seg = path.pairs[b:e]
    return math.fsum(C[seg[:, 0] - 1, seg[:, 1] - 1])


def _bresenham(i0: int, j0: int, i1: int, j1: int) -> Tuple[List[int], List[int]]:
    # Integer Bresenham; 2*err is sampled once per step so that a diagonal
    # move tests both axes against the same error value.
    d_f = i1 - i0
    d_t = j0 - j1
    err = d_f + d_t
    i, j = i0, j0
    out_i: List[int] = []
    out_j: List[int] = []
    while i != i1 or j != j1:
        if i != i0 or j != j0:
            out_i.append(i)
            out_j.append(j)
        e2 = 2 * err
        if e2 >= d_t:
            err += d_t
            i += 1
        if e2 <= d_f:
            err += d_f
            j += 1
    out_i.append(i1)
    out_j.append(j1)
    return out_i, out_j


def rasterize_linear(q0: Point, q1: Point) -> List[Point]:
    """Lattice points of the straight line from ``q0`` to ``q1``.

    ``q0`` itself is excluded and ``q1`` included, so that consecutive
    segments can be chained without repeating their shared key point.

    >>> rasterize_linear((1, 1), (1, 4))
    [(1, 2), (1, 3), (1, 4)]
    """
    i0, j0 = int(q0[0]), int(q0[1])
    i1, j1 = int(q1[0]), int(q1[1])
    if (i0, j0) == (i1, j1):
        return []
    if i1 < i0 or j1 < j0:
        raise InputError(f"end point {(i1, j1)} does not dominate start point {(i0, j0)}")
    ii, jj = _bresenham(i0, j0, i1, j1)
    return list(zip(ii, jj))


def linear_points(q0: Point, q1: Point) -> np.ndarray:
    """Same as :func:`rasterize_linear` as an ``(k, 2)`` int array."""
    pts = rasterize_linear(q0, q1)
    return np.array(pts, dtype=np.int64).reshape(-1, 2)


def linear_path_cost(path: WarpingPath, C: np.ndarray, b: int, e: int) -> float:
    """Cost of the straight replacement of the path between positions ``b`` and ``e``.

    :param path: warping path (typically the optimal one)
    :param C: cost matrix
    :param b: 1-based start position; its cost is not counted
    :param e: 1-based end position; its cost is counted
    :return: summed local cost over the rasterized line
    """
    _check_range(path, b, e)
    pts = linear_points(path.point(b), path.point(e))
    return math.fsum(C[pts[:, 0] - 1, pts[:, 1] - 1])


def rasterize_chain(key_points: Sequence[Point]) -> WarpingPath:
    """Full path through an ordered chain of key points."""
    key_points = [tuple(map(int, q)) for q in key_points]
    if not key_points:
        raise InputError("need at least one key point")
    pts = [key_points[0]]
    for q0, q1 in zip(key_points[:-1], key_points[1:]):
        pts.extend(rasterize_linear(q0, q1))
    return WarpingPath.from_pairs(pts)


def rasterize_simplified(simplified) -> WarpingPath:
    """Rasterize a :class:`~subwarp.segmenter.SimplifiedPath` (or a key-point list)."""
    key_points = getattr(simplified, "key_points", simplified)
    return rasterize_chain(key_points)


@dataclass(frozen=True)
class PathSegment:
    """One straight piece of a simplified path.

    ``b`` and ``e`` are positions on the underlying path; ``b_point`` and
    ``e_point`` the corresponding index pairs. ``linear_cost`` is never
    below ``optimal_cost`` when the underlying path is optimal.
    """

    b: int
    e: int
    b_point: Point
    e_point: Point
    optimal_cost: float
    linear_cost: float

    @property
    def length(self) -> int:
        return self.e - self.b

    @property
    def excess(self) -> float:
        return self.linear_cost - self.optimal_cost
