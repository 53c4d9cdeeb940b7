"""
subwarp.metrics
~~~~~~~~~~~~~~~

Per-segment quantities of a simplified path: absolute and log-ratio
compression, time shift, and the amplitude band around the first series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .path import WarpingPath, rasterize_simplified
from .series import InputError, as_series

SHIFT_DEFINITIONS = ("closest", "start", "end")


def compression(b: int, e: int, b2: int, e2: int) -> Tuple[int, float]:
    """Absolute compression ``K`` and log-ratio compression ``kappa``.

    The segment maps ``s1(b:e)`` onto ``s2(b2:e2)``. Negative values mean
    the second series is compressed, positive values that it is expanded.
    A zero span on one side gives ``kappa = +inf`` (``e == b``) or
    ``-inf`` (``e2 == b2``).
    """
    span1 = e - b
    span2 = e2 - b2
    if span1 < 0 or span2 < 0:
        raise InputError(f"segment end precedes its start: ({b}, {e}) -> ({b2}, {e2})")
    if span1 == 0 and span2 == 0:
        raise InputError("compression undefined for a segment with two zero spans")
    K = span2 - span1
    if span1 == 0:
        return K, math.inf
    if span2 == 0:
        return K, -math.inf
    return K, math.log(span2 / span1)


def shift(b: int, e: int, b2: int, e2: int, definition: str = "closest") -> int:
    """Time shift of a segment, in samples.

    ``"closest"`` is the offset from the diagonal of the segment point
    nearest to it (zero when the segment crosses the diagonal); ``"start"``
    and ``"end"`` use the offset of the first or last point.
    """
    start = b2 - b
    end = e2 - e
    if definition == "start":
        return start
    if definition == "end":
        return end
    if definition != "closest":
        raise InputError(f"shift definition must be one of {SHIFT_DEFINITIONS}, got {definition!r}")
    if start * end < 0:
        return 0
    if abs(start) <= abs(end):
        return start
    return end


@dataclass(frozen=True)
class SegmentReport:
    """Quantified mapping of ``s1(b:e)`` onto ``s2(b2:e2)`` (1-based, inclusive).

    Adjacent reports share their boundary index.
    """

    b: int
    e: int
    b2: int
    e2: int
    K: int
    kappa: float
    sigma: int
    optimal_cost: float
    linear_cost: float

    def to_dict(self) -> dict:
        return {
            "s1": [self.b, self.e],
            "s2": [self.b2, self.e2],
            "K": self.K,
            "kappa": format_kappa(self.kappa),
            "sigma": self.sigma,
            "optimal_cost": self.optimal_cost,
            "linear_cost": self.linear_cost,
        }


def format_kappa(kappa: float):
    """JSON-safe kappa: infinities become the strings ``"+inf"``/``"-inf"``."""
    if math.isinf(kappa):
        return "+inf" if kappa > 0 else "-inf"
    return kappa


@dataclass(frozen=True, eq=False)
class AmplitudeBand:
    """Largest upward (``alpha``) and downward (``beta``) deviation of the
    ``s2`` values matched to each index of ``s1``; arrays are 0-indexed by
    ``i - 1``.
    """

    alpha: np.ndarray
    beta: np.ndarray

    def bounds(self, s1) -> Tuple[np.ndarray, np.ndarray]:
        """Lower and upper edge of the shaded band around ``s1``."""
        v = as_series(s1).values
        return v - self.beta, v + self.alpha


def amplitude_band(s1, s2, path: WarpingPath) -> AmplitudeBand:
    """Amplitude band of ``s1`` against ``s2`` under a (rasterized) path."""
    s1 = as_series(s1)
    s2 = as_series(s2)
    if not (s1.is_univariate and s2.is_univariate):
        raise InputError("amplitude bands are defined for univariate series only")
    violation = path.validate(len(s1), len(s2))
    if violation is not None:
        raise InputError(f"invalid warping path: {violation}")
    i = path.pairs[:, 0] - 1
    j = path.pairs[:, 1] - 1
    diff = s2.values[j] - s1.values[i]
    alpha = np.zeros(len(s1))
    beta = np.zeros(len(s1))
    np.maximum.at(alpha, i, np.where(diff > 0, diff, 0.0))
    np.maximum.at(beta, i, np.where(diff < 0, -diff, 0.0))
    return AmplitudeBand(alpha, beta)


def report(simplified, s1, s2, shift_definition: str = "closest") -> Tuple[List[SegmentReport], Optional[AmplitudeBand]]:
    """Per-segment reports plus the amplitude band of the rasterized path.

    The band is ``None`` for multivariate series.
    """
    s1 = as_series(s1)
    s2 = as_series(s2)
    reports = []
    for seg in simplified.segments:
        (b, b2), (e, e2) = seg.b_point, seg.e_point
        K, kappa = compression(b, e, b2, e2)
        reports.append(SegmentReport(
            b, e, b2, e2, K, kappa, shift(b, e, b2, e2, shift_definition),
            seg.optimal_cost, seg.linear_cost,
        ))
    band = None
    if s1.is_univariate and s2.is_univariate:
        band = amplitude_band(s1, s2, rasterize_simplified(simplified))
    return reports, band
