"""
Reading the segments: compression, shift and amplitude
======================================================

A synthetic pair with a known history: the second series gains three
samples early on, runs three samples late, compresses 20 samples into 15,
then runs two samples early. A plateau near the end is raised by 0.4.
The segment reports recover all of it.
"""
# %%
import numpy as np

from subwarp import ToleranceSpec, report, simplify
from subwarp.fixtures import segmented_showcase

s1, s2 = segmented_showcase()
result = simplify(s1, s2, spec=ToleranceSpec(gamma_abs=0.3, gamma_rel=0.05))
reports, band = report(result.simplified, s1, s2)

# %%
# ``K`` counts the samples gained (+) or lost (-) by the second series,
# ``kappa`` is the log ratio of the two spans and ``sigma`` the time
# shift of the segment end closest to the diagonal.
for r in reports:
    print(f"s1 {r.b:3d}..{r.e:3d} -> s2 {r.b2:3d}..{r.e2:3d}  K={r.K:+d}  kappa={r.kappa:+.3f}  sigma={r.sigma:+d}")

# %%
# The amplitude band holds, per sample of ``s1``, the largest upward and
# downward deviation of the values matched to it.
top = int(np.argmax(band.alpha)) + 1
print(f"largest upward deviation {band.alpha.max():.3f} at s1 index {top}")
print(f"largest downward deviation {band.beta.max():.3f}")

# %%
# Shift has three possible readings; the default picks the segment end
# nearest to the diagonal and reports 0 when the segment crosses it.
from subwarp import shift

r = reports[2]
for definition in ("closest", "start", "end"):
    print(definition, shift(r.b, r.e, r.b2, r.e2, definition))
