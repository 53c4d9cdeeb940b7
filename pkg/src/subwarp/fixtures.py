"""
subwarp.fixtures
~~~~~~~~~~~~~~~~

Synthetic series pairs built by scripted transformations of simple base
waveforms (shift, uniform compression, amplitude scaling, plateau
insertion, additive noise). They stand in for UCR-style showcase data and
are fully determined by their seed.
"""
from __future__ import annotations

from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from .series import Series


def warp(f: Callable[[np.ndarray], np.ndarray], knots: Sequence[Tuple[float, float]]) -> np.ndarray:
    """Sample ``f`` through a piecewise-linear time map.

    ``knots`` are ``(i, j)`` pairs (1-based): sample ``j`` of the output
    reads ``f`` at the time ``i`` obtained by interpolating the knots.
    """
    k = np.asarray(knots, dtype=np.float64)
    j = np.arange(1, int(k[-1, 1]) + 1, dtype=np.float64)
    return f(np.interp(j, k[:, 1], k[:, 0]))


def _bump(t, center, width, height):
    return height * np.exp(-0.5 * ((t - center) / width) ** 2)


def _plateau(t, start, stop, height, edge=2.0):
    return height * 0.5 * (np.tanh((t - start) / edge) - np.tanh((t - stop) / edge))


def segmented_showcase(seed: int = 0) -> Tuple[Series, Series]:
    """Expansion, shift, compression and amplitude difference in one pair.

    The second series follows the first through the time map with knots
    ``(1, 1), (30, 33), (60, 63), (80, 78), (110, 108)``: three extra
    samples at the start, a stretch shifted by 3, a stretch compressed by
    5 samples and a tail shifted by -2. A raised plateau near the end is
    0.4 higher in the second series, which shows up in the amplitude band
    but not in the warping.
    """
    rng = np.random.default_rng(seed)
    features = [(8, 1.0), (20, -0.8), (38, 0.9), (50, -1.0), (66, 1.0), (75, -0.8)]

    def base(t, lift=0.0):
        out = _plateau(t, 88, 104, 0.8) + _plateau(t, 90, 102, lift, 3.0)
        for center, height in features:
            out = out + _bump(t, center, 3.0, height)
        return out

    s1 = base(np.arange(1, 111, dtype=np.float64))
    s2 = warp(lambda u: base(u, 0.4), [(1, 1), (30, 33), (60, 63), (80, 78), (110, 108)])
    s1 = s1 + rng.normal(0, 0.005, s1.size)
    s2 = s2 + rng.normal(0, 0.005, s2.size)
    return Series(s1, "base"), Series(s2, "warped")


def compressed_sine(seed: int = 0) -> Tuple[Series, Series]:
    """Slow drift with a sine burst (two periods) that the second series
    plays back in 30 instead of 60 samples.
    """
    rng = np.random.default_rng(seed)

    def base(t):
        burst = np.sin(2 * np.pi * (t - 50) / 30) * ((t >= 50) & (t <= 110))
        return 0.2 * np.sin(2 * np.pi * t / 60) + burst

    s1 = base(np.arange(1, 131, dtype=np.float64))
    s2 = warp(base, [(1, 1), (50, 50), (110, 80), (130, 100)])
    s1 = s1 + rng.normal(0, 0.01, s1.size)
    s2 = s2 + rng.normal(0, 0.01, s2.size)
    return Series(s1, "sine"), Series(s2, "sine-compressed")


def ecg_noisy_tail(seed: int = 3) -> Tuple[Series, Series]:
    """Two heartbeat-like series; the second has a higher, wider T-wave.

    Both end in a noisy near-flat tail and the second one drifts slightly
    downward there, which makes the optimal path fan out into a long
    one-to-many run at the end.
    """
    rng = np.random.default_rng(seed)

    def beat(t, t_height=0.35, t_width=6.0):
        return (_bump(t, 20, 3.0, 0.15) - _bump(t, 38, 1.2, 0.25) + _bump(t, 42, 1.5, 1.6)
                - _bump(t, 46, 1.2, 0.4) + _bump(t, 75, t_width, t_height))

    n = 136
    t = np.arange(1, n + 1, dtype=np.float64)
    s1 = beat(t)
    s2 = warp(lambda u: beat(u, 0.55, 7.5), [(1, 1), (30, 27), (55, 52), (100, 104), (136, 136)])
    s1[100:] += rng.normal(0, 0.03, n - 100)
    s2[104:] += rng.normal(0, 0.03, n - 104) - 0.05 * np.linspace(0, 1, n - 104)
    return Series(s1, "ecg-a"), Series(s2, "ecg-b")


def valley_pair(seed: int = 5) -> Tuple[Series, Series]:
    """Low-amplitude noisy start followed by a valley that is compressed in ``s2``."""
    rng = np.random.default_rng(seed)

    def base(t):
        return -1.5 * np.exp(-0.5 * ((t - 90) / 12.0) ** 2) + 0.5 * np.tanh((t - 130) / 5)

    s1 = base(np.arange(1, 151, dtype=np.float64))
    s2 = warp(base, [(1, 1), (65, 68), (115, 103), (150, 140)])
    s1 = s1 + rng.normal(0, 0.04, s1.size)
    s2 = s2 + rng.normal(0, 0.04, s2.size)
    return Series(s1, "umd-a"), Series(s2, "umd-b")


def paused_process(seed: int = 2, pause_at: int = 75, pause_length: int = 25) -> Tuple[Series, Series]:
    """Smooth oscillation where the second series holds its value for a while.

    The hold starts at index ``pause_at`` of the second series and lasts
    ``pause_length`` samples; afterwards the pattern continues where it
    left off.
    """
    rng = np.random.default_rng(seed)

    def base(t):
        return np.sin(2 * np.pi * t / 40) + 0.5 * np.sin(2 * np.pi * t / 17)

    t = np.arange(1, 129, dtype=np.float64)
    s1 = base(t) + rng.normal(0, 0.01, t.size)
    knots = [(1, 1), (pause_at, pause_at), (pause_at, pause_at + pause_length),
             (128, 128 + pause_length)]
    s2 = warp(base, knots) + rng.normal(0, 0.01, 128 + pause_length)
    return Series(s1, "process"), Series(s2, "process-paused")


FIXTURES: Dict[str, Callable[[], Tuple[Series, Series]]] = {
    "segmented": segmented_showcase,
    "sine": compressed_sine,
    "ecg": ecg_noisy_tail,
    "umd": valley_pair,
    "pause": paused_process,
}
