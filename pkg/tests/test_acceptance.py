"""Acceptance criteria 1-9, one test each.

Every test records a PASS/FAIL line that is printed in the pytest terminal
summary (and immediately with ``-s``). Oracles here are written
independently of the package internals.
"""
import contextlib
import functools
import itertools
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from goldens import GOLDEN_DIR, artifacts
from subwarp import (
    CostFunction,
    ToleranceSpec,
    amplitude_band,
    build_cost_matrix,
    compression,
    dtw,
    rasterize_linear,
    report,
    shift,
    simplify,
    simplify_result,
)
from subwarp.fixtures import FIXTURES

pytestmark = pytest.mark.acceptance


@contextlib.contextmanager
def criterion(number, title):
    info = {"detail": ""}
    try:
        yield info
    except BaseException:
        ACCEPTANCE_LINES.append((number, title, False, info["detail"] or "assertion failed"))
        print(f"[FAIL] criterion {number}: {title}")
        raise
    ACCEPTANCE_LINES.append((number, title, True, info["detail"]))
    print(f"[PASS] criterion {number}: {title} -- {info['detail']}")


# ---------------------------------------------------------------- oracles

@functools.lru_cache(maxsize=None)
def delannoy(a, b):
    if a == 0 or b == 0:
        return 1
    return delannoy(a - 1, b) + delannoy(a, b - 1) + delannoy(a - 1, b - 1)


def enumerate_paths(n, m):
    """All warping paths, built forward by recursion on the last pair."""
    if (n, m) == (1, 1):
        return [[(1, 1)]]
    out = []
    for pi, pj in ((n - 1, m - 1), (n, m - 1), (n - 1, m)):
        if pi >= 1 and pj >= 1:
            out.extend(p + [(n, m)] for p in enumerate_paths(pi, pj))
    return out


def raster_is_valid(q0, pts, q1):
    seq = [q0] + pts
    if seq[-1] != q1:
        return False
    for (a, b), (c, d) in zip(seq, seq[1:]):
        if (c - a, d - b) not in ((1, 1), (1, 0), (0, 1)):
            return False
    return all(q0[0] <= i <= q1[0] and q0[1] <= j <= q1[1] for i, j in seq)


def random_pair(rng, lo, hi):
    n, m = (int(v) for v in rng.integers(lo, hi + 1, size=2))
    walk = lambda k: np.cumsum(rng.normal(size=k)) * 0.3 + rng.normal(0, 0.1, k)
    return walk(n), walk(m)


# ---------------------------------------------------------------- 1

def test_criterion_1_dtw_matches_exhaustive_enumeration():
    with criterion(1, "DTW cost equals exhaustive minimum (n,m <= 6, lambda in {1,2})") as info:
        rng = np.random.default_rng(2024)
        pairs = 500
        for k in range(pairs):
            n, m = (int(v) for v in rng.integers(1, 7, size=2))
            lam = (1.0, 2.0)[k % 2]
            f = CostFunction(lam, lam)
            x, y = rng.normal(size=n), rng.normal(size=m)
            C = build_cost_matrix(x, y, f)
            paths = enumerate_paths(n, m)
            assert len(paths) == delannoy(n - 1, m - 1)
            best = math.inf
            for p in paths:
                total = 0.0
                for i, j in p:
                    total += C[i - 1, j - 1]
                best = min(best, total)
            got = dtw(x, y, f).cost
            assert got == best, (n, m, lam, got, best)
        info["detail"] = f"{pairs} pairs, exact equality, path counts = Delannoy numbers"


# ---------------------------------------------------------------- 2, 3, 5

GAMMA_ABS = (0.0, 0.05, 0.2)
GAMMA_REL = (0.0, 0.1, 1.0)


@pytest.fixture(scope="module")
def bound_runs():
    rng = np.random.default_rng(7)
    runs = []
    for _ in range(1000):
        x, y = random_pair(rng, 20, 80)
        base = dtw(x, y, CostFunction(2, 2))
        for ga, gr in itertools.product(GAMMA_ABS, GAMMA_REL):
            r = simplify_result(base, ToleranceSpec(ga, gr))
            raster = r.simplified.rasterize()
            direct = float(np.sum(base.cost_matrix[raster.pairs[:, 0] - 1, raster.pairs[:, 1] - 1]))
            runs.append((ga, gr, base, r, direct))
    return runs


def test_criterion_2_bound_guarantee(bound_runs):
    with criterion(2, "bound d~ <= d*(1+g_rel) + g_abs + 1e-9 over 1000 pairs x 9 tolerances") as info:
        worst = math.inf
        for ga, gr, base, r, direct in bound_runs:
            d_simpl = math.sqrt(direct)
            d_opt = math.sqrt(base.cost)
            slack = d_opt * (1 + gr) + ga - d_simpl
            worst = min(worst, slack)
            assert slack >= -1e-9, (ga, gr, d_opt, d_simpl)
            if gr == 0:
                assert d_simpl <= d_opt + ga + 1e-9
            if ga == 0:
                assert d_simpl <= d_opt * (1 + gr) + 1e-9
            assert d_simpl >= d_opt - 1e-9
        info["detail"] = f"{len(bound_runs)} runs, worst slack {worst:.3e}"


def test_criterion_3_zero_tolerance_identity(bound_runs):
    with criterion(3, "zero tolerance gives d~ = d* within 1e-9") as info:
        worst = 0.0
        count = 0
        for ga, gr, base, r, direct in bound_runs:
            if ga == 0 and gr == 0:
                count += 1
                gap = abs(math.sqrt(direct) - base.distance)
                worst = max(worst, gap)
                assert gap <= 1e-9
        info["detail"] = f"{count} instances, max |d~ - d*| = {worst:.3e}"


def test_criterion_5_cost_bookkeeping(bound_runs):
    with criterion(5, "C(1,1) + sum of segment costs equals summed raster cost within 1e-9") as info:
        worst = 0.0
        for ga, gr, base, r, direct in bound_runs:
            summed = base.cost_matrix[0, 0] + sum(s.linear_cost for s in r.simplified.segments)
            worst = max(worst, abs(summed - direct))
            assert abs(summed - direct) <= 1e-9
        info["detail"] = f"{len(bound_runs)} runs, max abs difference {worst:.3e}"


# ---------------------------------------------------------------- 4

def test_criterion_4_rasterization_validity():
    with criterion(4, "exhaustive rasterization validity for endpoints <= 25") as info:
        count = 0
        rng = range(1, 26)
        for i0, j0 in itertools.product(rng, rng):
            for i1 in range(i0, 26):
                for j1 in range(j0, 26):
                    pts = rasterize_linear((i0, j0), (i1, j1))
                    if (i0, j0) == (i1, j1):
                        assert pts == []
                    else:
                        assert raster_is_valid((i0, j0), pts, (i1, j1)), ((i0, j0), (i1, j1))
                    count += 1
        info["detail"] = f"{count} endpoint pairs"


# ---------------------------------------------------------------- 6

def test_criterion_6_merge_monotonicity():
    with criterion(6, "merge never adds key points; sine fixture merges to one compressed segment") as info:
        rng = np.random.default_rng(8)
        for _ in range(200):
            x, y = random_pair(rng, 20, 80)
            r = simplify(x, y, spec=ToleranceSpec(0.1, 0.1))
            assert len(r.simplified.key_indices) <= len(r.phase1.key_indices)
        s1, s2 = FIXTURES["sine"]()
        r = simplify(s1, s2, spec=ToleranceSpec(0.2, 0.05))
        assert len(r.simplified) < len(r.phase1)
        reps, _ = report(r.simplified, s1, s2)
        # the burst occupies s1 samples 50..110
        covering = [s for s in reps if s.b <= 52 and s.e >= 108]
        assert len(covering) == 1 and covering[0].kappa < 0
        info["detail"] = (f"sine fixture: {len(r.phase1)} -> {len(r.simplified)} segments, "
                          f"burst segment s1 {covering[0].b}..{covering[0].e} -> s2 {covering[0].b2}.."
                          f"{covering[0].e2}, kappa {covering[0].kappa:.3f}")


# ---------------------------------------------------------------- 7

def test_criterion_7_metric_formulas():
    with criterion(7, "compression/shift/band equal brute-force oracles on 1000 cases") as info:
        rng = np.random.default_rng(9)
        for _ in range(1000):
            b, b2 = (int(v) for v in rng.integers(1, 100, size=2))
            e, e2 = b + int(rng.integers(0, 50)), b2 + int(rng.integers(0, 50))
            if e == b and e2 == b2:
                e += 1
            K, kappa = compression(b, e, b2, e2)
            assert K == len(range(b2, e2)) - len(range(b, e))
            if e == b:
                assert kappa == math.inf
            elif e2 == b2:
                assert kappa == -math.inf
            else:
                assert abs(kappa - (math.log(e2 - b2) - math.log(e - b))) <= 1e-12
            offsets = [b2 - b, e2 - e]
            want = 0 if min(offsets) < 0 < max(offsets) else min(offsets, key=abs)
            assert shift(b, e, b2, e2) == want
        for _ in range(1000):
            n, m = (int(v) for v in rng.integers(1, 25, size=2))
            x, y = rng.normal(size=n), rng.normal(size=m)
            path = dtw(x, y).path
            band = amplitude_band(x, y, path)
            up, down = [0.0] * n, [0.0] * n
            for i, j in path:
                d = y[j - 1] - x[i - 1]
                if d >= 0:
                    up[i - 1] = max(up[i - 1], d)
                else:
                    down[i - 1] = max(down[i - 1], -d)
            assert band.alpha.tolist() == up and band.beta.tolist() == down
        info["detail"] = "1000 segments + 1000 paths, exact"


# ---------------------------------------------------------------- 8

def test_criterion_8_render_determinism():
    with criterion(8, "golden SVG/JSON byte equality across runs; SVGs are well-formed XML") as info:
        first, second = artifacts(), artifacts()
        assert first == second
        for name, text in first.items():
            stored = (GOLDEN_DIR / name).read_bytes()
            assert stored == text.encode("utf-8"), f"{name} differs from the committed golden"
            if name.endswith(".svg"):
                ET.fromstring(stored)
        committed = {p.name for p in GOLDEN_DIR.iterdir()}
        assert committed == set(first)
        info["detail"] = f"{len(first)} golden files"


# ---------------------------------------------------------------- 9

def test_criterion_9_noise_robustness():
    with criterion(9, "ECG fixture: <= 6 segments vs >= 30 corners, bound holds") as info:
        s1, s2 = FIXTURES["ecg"]()
        spec = ToleranceSpec(gamma_abs=0.2, gamma_rel=0.05)
        r = simplify(s1, s2, spec=spec)
        corners = r.dtw.path.corner_count()
        # the noisy tail makes the optimal path run one-to-many somewhere
        steps = np.diff(r.dtw.path.pairs, axis=0)
        longest = max(len(list(g)) for k, g in itertools.groupby(map(tuple, steps)) if k != (1, 1))
        assert len(r.simplified) <= 6
        assert corners >= 30
        assert longest >= 10
        assert r.distance <= r.dtw.distance * 1.05 + 0.2 + 1e-9
        info["detail"] = (f"{len(r.simplified)} segments, {corners} corners, longest 1-to-n run {longest}, "
                          f"d~ {r.distance:.4f} <= {r.bound:.4f}")
