"""
subwarp.verify
~~~~~~~~~~~~~~

Seeded self-checks that compare the implementation against independent
oracles:

* ``dtw``: DTW cost versus the minimum over an exhaustive enumeration of
  all warping paths on small grids (the enumerator is itself checked
  against the Delannoy-number path count);
* ``bound``: random pairs simplified over a grid of tolerances; the
  simplified distance must respect the guaranteed bound, collapse to the
  DTW distance at zero tolerance, and its cost must equal the sum of the
  per-segment costs;
* ``raster``: every straight segment between lattice points up to a size
  limit must rasterize to a valid path.

Each suite returns a :class:`SuiteResult`; ``worst_slack`` is the smallest
raw margin seen. Small negative margins (below the suite tolerance) come
from floating-point rounding and still count as passing.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .dtw import accumulate, build_cost_matrix, dtw
from .path import rasterize_linear, validate_path
from .segmenter import ToleranceSpec, simplify_result
from .series import CostFunction

GAMMA_ABS_GRID = (0.0, 0.05, 0.2)
GAMMA_REL_GRID = (0.0, 0.1, 1.0)
IDENTITY_TOL = 1e-9
BOUND_TOL = 1e-9


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    worst_slack: float = math.inf
    examples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0

    def record(self, slack: float, ok: bool, detail: str = "") -> None:
        self.cases += 1
        self.worst_slack = min(self.worst_slack, slack)
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(detail)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: {self.cases} checks, {self.failures} failures, "
                f"worst slack {self.worst_slack:.3e}")


def delannoy(a: int, b: int) -> int:
    """Number of lattice paths from (0, 0) to (a, b) with steps E, N and NE."""
    return sum(math.comb(a, k) * math.comb(b, k) * 2 ** k for k in range(min(a, b) + 1))


def enumerate_paths(n: int, m: int) -> Iterator[List[Tuple[int, int]]]:
    """Every warping path on an ``n`` x ``m`` grid (1-based pairs)."""
    path = [(1, 1)]

    def walk():
        i, j = path[-1]
        if (i, j) == (n, m):
            yield list(path)
            return
        for di, dj in ((1, 1), (1, 0), (0, 1)):
            if i + di <= n and j + dj <= m:
                path.append((i + di, j + dj))
                yield from walk()
                path.pop()

    yield from walk()


def brute_force_dtw(C: np.ndarray) -> Tuple[float, int]:
    """Minimum path cost by enumeration, and the number of paths seen.

    Each path cost is summed front to back, the same order in which the
    dynamic program accumulates, so the two agree bit for bit.
    """
    n, m = C.shape
    best = math.inf
    count = 0
    for p in enumerate_paths(n, m):
        count += 1
        total = 0.0
        for i, j in p:
            total = total + C[i - 1, j - 1]
        best = min(best, total)
    return best, count


def _random_series(rng: np.random.Generator, n: int) -> np.ndarray:
    # random walk plus jitter: smooth enough to give structured paths
    return np.cumsum(rng.normal(0.0, 1.0, n)) * 0.3 + rng.normal(0.0, 0.1, n)


def dtw_oracle_suite(seed: int = 0, pairs: int = 500, max_len: int = 6) -> SuiteResult:
    rng = np.random.default_rng(seed)
    res = SuiteResult("dtw-oracle")
    cost_functions = (CostFunction(1.0, 1.0), CostFunction(2.0, 2.0))
    for k in range(pairs):
        n, m = (int(v) for v in rng.integers(1, max_len + 1, size=2))
        f = cost_functions[k % 2]
        x = rng.normal(size=n)
        y = rng.normal(size=m)
        C = build_cost_matrix(x, y, f)
        got = float(accumulate(C)[-1, -1])
        want, count = brute_force_dtw(C)
        expected = delannoy(n - 1, m - 1)
        ok = got == want and count == expected
        res.record(0.0 - abs(got - want), ok,
                   f"n={n} m={m} lambda={f.lambda_exponent}: dtw={got!r} oracle={want!r} "
                   f"paths={count} delannoy={expected}")
    return res


@dataclass
class BoundSuiteResults:
    bound: SuiteResult
    identity: SuiteResult
    bookkeeping: SuiteResult
    # slices of the bound check: only gamma_abs active / only gamma_rel active
    abs_only: SuiteResult
    rel_only: SuiteResult

    def all(self) -> Sequence[SuiteResult]:
        return (self.bound, self.identity, self.bookkeeping, self.abs_only, self.rel_only)


def bound_suite(seed: int = 0, pairs: int = 1000, min_len: int = 20, max_len: int = 80,
                gamma_abs: Sequence[float] = GAMMA_ABS_GRID,
                gamma_rel: Sequence[float] = GAMMA_REL_GRID) -> BoundSuiteResults:
    rng = np.random.default_rng(seed)
    out = BoundSuiteResults(SuiteResult("bound"), SuiteResult("zero-tolerance-identity"),
                            SuiteResult("cost-bookkeeping"), SuiteResult("bound-abs-only"),
                            SuiteResult("bound-rel-only"))
    f = CostFunction(2.0, 2.0)
    for _ in range(pairs):
        n, m = (int(v) for v in rng.integers(min_len, max_len + 1, size=2))
        base = dtw(_random_series(rng, n), _random_series(rng, m), f)
        d_opt = base.distance
        for ga, gr in itertools.product(gamma_abs, gamma_rel):
            r = simplify_result(base, ToleranceSpec(ga, gr))
            tag = f"n={n} m={m} gamma=({ga}, {gr})"
            slack = r.bound - r.distance
            out.bound.record(slack, slack >= -BOUND_TOL, f"{tag}: {r.distance!r} > {r.bound!r}")
            if gr == 0:
                s = d_opt + ga - r.distance
                out.abs_only.record(s, s >= -BOUND_TOL, f"{tag}: {r.distance!r} > {d_opt + ga!r}")
            if ga == 0:
                s = d_opt * (1 + gr) - r.distance
                out.rel_only.record(s, s >= -BOUND_TOL, f"{tag}: {r.distance!r} > {d_opt * (1 + gr)!r}")
            if ga == 0 and gr == 0:
                s = 0.0 - abs(r.distance - d_opt)
                out.identity.record(s, s >= -IDENTITY_TOL, f"{tag}: {r.distance!r} != {d_opt!r}")
            summed = r.simplified.linear_cost
            direct = r.simplified.rasterize().total_cost(base.cost_matrix)
            s = 0.0 - abs(summed - direct)
            out.bookkeeping.record(s, s >= -IDENTITY_TOL, f"{tag}: segments {summed!r} vs raster {direct!r}")
    return out


def raster_suite(limit: int = 25) -> SuiteResult:
    """Exhaustive check of the line rasterizer for all dominated endpoint pairs."""
    res = SuiteResult("rasterization")
    coords = range(1, limit + 1)
    for i0, j0 in itertools.product(coords, coords):
        for i1 in range(i0, limit + 1):
            for j1 in range(j0, limit + 1):
                pts = [(i0, j0)] + rasterize_linear((i0, j0), (i1, j1))
                shifted = [(i - i0 + 1, j - j0 + 1) for i, j in pts]
                violation = validate_path(shifted, i1 - i0 + 1, j1 - j0 + 1)
                ok = violation is None and pts[-1] == (i1, j1)
                res.record(0.0 if ok else -1.0, ok, f"{(i0, j0)} -> {(i1, j1)}: {violation}")
    return res


def run_all(seed: int = 0, dtw_pairs: int = 500, bound_pairs: int = 1000, raster_limit: int = 25,
            progress: Optional[Callable[[SuiteResult], None]] = None) -> List[SuiteResult]:
    results: List[SuiteResult] = []

    def emit(r: SuiteResult):
        results.append(r)
        if progress is not None:
            progress(r)

    emit(dtw_oracle_suite(seed, dtw_pairs))
    with warnings.catch_warnings():
        # a deliberately broken criterion makes the splitter warn on every unit step
        warnings.simplefilter("ignore", RuntimeWarning)
        for r in bound_suite(seed, bound_pairs).all():
            emit(r)
    emit(raster_suite(raster_limit))
    return results


SUITES: Dict[str, Callable[..., object]] = {
    "dtw": dtw_oracle_suite,
    "bound": bound_suite,
    "raster": raster_suite,
}
