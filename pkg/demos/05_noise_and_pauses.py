"""
Noise fans and paused processes
===============================

Two situations where the raw warping path is hard to read. A noisy flat
tail makes the optimal path fan out over many tiny steps; the simplified
path covers it with one segment. A process that pauses shows up as a single
vertical segment with infinite log compression.
"""
# %%
import pathlib

from subwarp import ToleranceSpec, render_point_to_point, render_segmented, report, simplify
from subwarp.fixtures import ecg_noisy_tail, paused_process
from subwarp.svg import write_svg

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
spec = ToleranceSpec(gamma_abs=0.2, gamma_rel=0.05)

# %%
# Heartbeat-like pair with a noisy tail.
s1, s2 = ecg_noisy_tail()
result = simplify(s1, s2, spec=spec)
print("optimal path corners:", result.dtw.path.corner_count())
print("simplified segments:", len(result.simplified), result.simplified.key_points)
reports, band = report(result.simplified, s1, s2)
write_svg(render_point_to_point(s1, s2, result.dtw.path), out / "ecg_matches.svg")
write_svg(render_segmented(s1, s2, result.simplified, reports, band), out / "ecg_segmented.svg")

# %%
# The second process holds its value for 25 samples starting at index 75.
p1, p2 = paused_process()
paused = simplify(p1, p2, spec=spec)
for r in report(paused.simplified, p1, p2)[0]:
    print(r.to_dict()["s1"], r.to_dict()["s2"], "kappa", r.to_dict()["kappa"])
