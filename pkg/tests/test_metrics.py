import math

import numpy as np
import pytest

from subwarp import InputError, Series, ToleranceSpec, WarpingPath, amplitude_band, compression, report, shift, simplify
from subwarp.fixtures import FIXTURES
from subwarp.metrics import format_kappa


def test_compression_examples():
    assert compression(1, 11, 1, 11) == (0, 0.0)
    K, kappa = compression(1, 11, 1, 6)
    assert K == -5 and kappa == pytest.approx(-0.6931471805599453, abs=1e-12)
    assert compression(1, 1, 1, 6) == (5, math.inf)
    assert compression(1, 6, 3, 3) == (-5, -math.inf)


def test_compression_errors():
    with pytest.raises(InputError):
        compression(4, 4, 2, 2)
    with pytest.raises(InputError):
        compression(5, 3, 1, 2)


@pytest.mark.parametrize("b,e,b2,e2,want", [
    (1, 10, 4, 15, 3),
    (5, 10, 3, 14, 0),
    (10, 20, 3, 16, -4),
    (1, 5, 1, 9, 0),
])
def test_shift_examples(b, e, b2, e2, want):
    assert shift(b, e, b2, e2) == want


def test_shift_alternatives():
    assert shift(10, 20, 3, 16, "start") == -7
    assert shift(10, 20, 3, 16, "end") == -4
    with pytest.raises(InputError):
        shift(1, 2, 1, 2, "middle")


def test_compression_and_shift_antisymmetry():
    rng = np.random.default_rng(20)
    for _ in range(500):
        b, b2 = rng.integers(1, 50, size=2)
        e, e2 = b + rng.integers(1, 30), b2 + rng.integers(1, 30)
        K, kappa = compression(b, e, b2, e2)
        K_, kappa_ = compression(b2, e2, b, e)
        assert K == -K_ and kappa == pytest.approx(-kappa_, abs=1e-12)
        assert (kappa == 0) == (e - b == e2 - b2)
        assert np.sign(K) == np.sign(kappa)
        assert shift(b, e, b2, e2) == -shift(b2, e2, b, e)


def test_band_examples():
    x = [0.5, 1.0, -2.0]
    b = amplitude_band(x, x, WarpingPath.from_pairs([(1, 1), (2, 2), (3, 3)]))
    assert not b.alpha.any() and not b.beta.any()
    b = amplitude_band([0.0], [-1.0, 2.0], WarpingPath.from_pairs([(1, 1), (1, 2)]))
    assert b.alpha.tolist() == [2.0] and b.beta.tolist() == [1.0]
    lo, hi = b.bounds([0.0])
    assert lo.tolist() == [-1.0] and hi.tolist() == [2.0]


def test_band_errors():
    with pytest.raises(InputError):
        amplitude_band([0, 1], [0, 1], WarpingPath.from_pairs([(1, 1), (2, 1)]))
    with pytest.raises(InputError):
        amplitude_band(Series([[0, 1]]), Series([[0, 1]]), WarpingPath.from_pairs([(1, 1)]))


def test_band_is_tight_against_matched_values():
    rng = np.random.default_rng(21)
    for _ in range(50):
        x, y = rng.normal(size=rng.integers(2, 30)), rng.normal(size=rng.integers(2, 30))
        r = simplify(x, y, spec=ToleranceSpec(0.3, 0.1))
        path = r.simplified.rasterize()
        band = amplitude_band(x, y, path)
        lo, hi = band.bounds(x)
        for i in range(1, len(x) + 1):
            matched = [y[j - 1] for ii, j in path if ii == i]
            assert hi[i - 1] >= max(matched) - 1e-12 and lo[i - 1] <= min(matched) + 1e-12
            assert max(hi[i - 1] - max(matched), 0) < 1e-12 or max(matched) < x[i - 1]
            assert max(min(matched) - lo[i - 1], 0) < 1e-12 or min(matched) > x[i - 1]


def test_report_identity():
    x = [0.0, 1.0, 0.5, 2.0]
    r = simplify(x, x)
    reps, band = report(r.simplified, x, x)
    assert len(reps) == 1
    assert (reps[0].K, reps[0].kappa, reps[0].sigma) == (0, 0.0, 0)
    assert not band.alpha.any() and not band.beta.any()


def test_report_spans_tile_both_series():
    rng = np.random.default_rng(22)
    for _ in range(30):
        x, y = rng.normal(size=rng.integers(5, 40)), rng.normal(size=rng.integers(5, 40))
        r = simplify(x, y, spec=ToleranceSpec(0.2, 0.05))
        reps, _ = report(r.simplified, x, y)
        assert sum(s.e - s.b for s in reps) == len(x) - 1
        assert sum(s.e2 - s.b2 for s in reps) == len(y) - 1
        for a, b in zip(reps, reps[1:]):
            assert (a.e, a.e2) == (b.b, b.b2)


def test_report_multivariate_has_no_band():
    x = [[0, 0], [1, 1], [2, 2]]
    reps, band = report(simplify(x, x).simplified, x, x)
    assert band is None and len(reps) == 1


def test_to_dict_serializes_infinite_kappa():
    assert format_kappa(math.inf) == "+inf" and format_kappa(-math.inf) == "-inf"
    assert format_kappa(-0.5) == -0.5


def test_segmented_fixture_recovers_constructed_transformations():
    s1, s2 = FIXTURES["segmented"]()
    r = simplify(s1, s2, spec=ToleranceSpec(0.3, 0.05))
    reps, band = report(r.simplified, s1, s2)
    # built with knots (1,1) (30,33) (60,63) (80,78) (110,108)
    assert len(reps) == 4
    assert [int(np.sign(s.K)) for s in reps] == [1, 0, -1, 0]
    assert [int(np.sign(s.sigma)) for s in reps] == [0, 1, 0, -1]
    assert reps[2].K == -5
    # the raised plateau (s1 indices 90..102) shows up in the band, not the warping
    assert band.alpha[92:100].min() > 0.3
    assert 88 <= int(np.argmax(band.alpha)) + 1 <= 104
    assert band.alpha[:80].max() < 0.5 * band.alpha[92:100].min()


def test_pause_fixture_yields_vertical_segment():
    s1, s2 = FIXTURES["pause"]()
    r = simplify(s1, s2, spec=ToleranceSpec(0.2, 0.05))
    reps, _ = report(r.simplified, s1, s2)
    vertical = [s for s in reps if s.kappa == math.inf]
    assert len(vertical) == 1
    v = vertical[0]
    assert v.b == v.e == 75 and (v.b2, v.e2) == (75, 100) and v.K == 25
    assert v.to_dict()["kappa"] == "+inf"
