"""
subwarp.series
~~~~~~~~~~~~~~

Time series containers and local cost functions of the form
``phi(||x - y||_p)`` with ``phi(z) = z**lambda``.

Indices exposed to users are 1-based; storage is a plain numpy array.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np


class InputError(ValueError):
    """Raised for malformed user input (bad shapes, non-finite values, ...)."""


@dataclass(frozen=True, eq=False)
class Series:
    """Equidistant sequence of scalar or fixed-dimension vector samples.

    ``values`` is stored as float64 with shape ``(n,)`` for univariate series
    or ``(n, d)`` for multivariate ones. The array is made read-only.
    """

    values: np.ndarray
    name: Optional[str] = None

    def __post_init__(self):
        try:
            arr = np.array(self.values, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise InputError(f"series values are not numeric: {exc}") from None
        if arr.ndim == 2 and arr.shape[1] == 1:
            arr = arr[:, 0]
        if arr.ndim not in (1, 2):
            raise InputError(f"series must be 1-D or 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise InputError("series must contain at least one sample")
        if arr.ndim == 2 and arr.shape[1] < 1:
            raise InputError("vector samples must have dimension >= 1")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr.reshape(arr.shape[0], -1)).any(axis=1))[0])
            raise InputError(f"non-finite sample at index {bad + 1}")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self):
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        return 1 if self.values.ndim == 1 else self.values.shape[1]

    @property
    def is_univariate(self) -> bool:
        return self.values.ndim == 1

    def __call__(self, i: int):
        """Sample at 1-based index ``i``."""
        if not 1 <= i <= len(self):
            raise IndexError(f"index {i} outside 1..{len(self)}")
        return self.values[i - 1]


def as_series(x, name=None) -> Series:
    if isinstance(x, Series):
        return x
    return Series(x, name=name)


def _as_sample(a) -> np.ndarray:
    return np.atleast_1d(np.asarray(a, dtype=np.float64))


@dataclass(frozen=True)
class CostFunction:
    """Local cost ``delta(a, b) = ||a - b||_p ** lambda_exponent``.

    Defaults give the squared Euclidean cost. ``lambda_exponent < 1`` is
    rejected: the combined tolerance bound needs a convex ``phi``.
    """

    lambda_exponent: float = 2.0
    p_norm: float = 2.0

    def __post_init__(self):
        lam = float(self.lambda_exponent)
        p = float(self.p_norm)
        if not math.isfinite(lam) or lam < 1:
            raise InputError(f"lambda_exponent must be >= 1, got {self.lambda_exponent}")
        if not (p >= 1):
            raise InputError(f"p_norm must be >= 1, got {self.p_norm}")
        object.__setattr__(self, "lambda_exponent", lam)
        object.__setattr__(self, "p_norm", p)

    def norm(self, diff: np.ndarray) -> np.ndarray:
        """p-norm along the last axis (absolute value for scalars)."""
        diff = np.abs(diff)
        if diff.ndim == 0:
            return diff
        if diff.shape[-1] == 1:
            return diff[..., 0]
        p = self.p_norm
        if p == 1:
            return diff.sum(axis=-1)
        if p == 2:
            return np.sqrt((diff * diff).sum(axis=-1))
        if math.isinf(p):
            return diff.max(axis=-1)
        return (diff ** p).sum(axis=-1) ** (1.0 / p)

    def phi(self, z):
        lam = self.lambda_exponent
        if lam == 1:
            return z
        if lam == 2:
            return z * z
        return z ** lam

    def local_cost(self, a, b) -> float:
        """Cost between two samples (scalars or equal-length vectors)."""
        a = _as_sample(a)
        b = _as_sample(b)
        if a.shape != b.shape:
            raise InputError(f"sample dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
        return float(self.phi(self.norm(a - b)))

    def pairwise(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """All local costs between samples of ``x`` (n,[d]) and ``y`` (m,[d])."""
        if x.ndim == 1 and y.ndim == 1:
            diff = np.abs(x[:, None] - y[None, :])
            return self.phi(diff)
        x2 = x.reshape(x.shape[0], -1)
        y2 = y.reshape(y.shape[0], -1)
        if x2.shape[1] != y2.shape[1]:
            raise InputError(f"sample dimension mismatch: {x2.shape[1]} vs {y2.shape[1]}")
        return self.phi(self.norm(x2[:, None, :] - y2[None, :, :]))

    def cost_to_distance(self, c: float) -> float:
        """Inverse of ``phi``: ``c ** (1 / lambda)``."""
        if c < 0:
            raise InputError(f"cost must be non-negative, got {c}")
        lam = self.lambda_exponent
        if lam == 1:
            return float(c)
        if lam == 2:
            return math.sqrt(c)
        return float(c) ** (1.0 / lam)

    def distance_to_cost(self, d: float) -> float:
        if d < 0:
            raise InputError(f"distance must be non-negative, got {d}")
        return float(self.phi(float(d)))


SQEUCLIDEAN = CostFunction(2.0, 2.0)
MANHATTAN = CostFunction(1.0, 1.0)
