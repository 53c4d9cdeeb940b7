"""
Simplifying a warping path
==========================

The optimal path of a sine burst that is played back twice as fast is
replaced by a handful of straight segments. The split phase cuts the path
until every straight replacement is cheap enough; the merge phase then
joins neighbours, shortest first, as long as the tolerance still holds.
"""
# %%
from subwarp import ToleranceSpec, report, simplify
from subwarp.fixtures import compressed_sine

s1, s2 = compressed_sine()
print(f"{s1.name}: {len(s1)} samples, {s2.name}: {len(s2)} samples")

# %%
# Tolerances live in distance units. ``gamma_rel`` allows a relative
# increase of the DTW distance, ``gamma_abs`` an absolute one; the
# simplified distance never exceeds ``d * (1 + gamma_rel) + gamma_abs``.
spec = ToleranceSpec(gamma_abs=0.2, gamma_rel=0.05)
result = simplify(s1, s2, spec=spec)
print("optimal path length:", len(result.dtw.path), "corner points:", result.dtw.path.corner_count())
print("after split :", result.phase1.key_points)
print("after merge :", result.simplified.key_points)
print(f"distance {result.dtw.distance:.4f} -> {result.distance:.4f} (bound {result.bound:.4f})")

# %%
# Each segment maps a stretch of ``s1`` linearly onto a stretch of ``s2``.
# The middle one covers the burst: 59 samples squeezed into 29.
reports, band = report(result.simplified, s1, s2)
for r in reports:
    print(f"s1 {r.b:3d}..{r.e:3d} -> s2 {r.b2:3d}..{r.e2:3d}  K={r.K:+d}  kappa={r.kappa:+.3f}  shift={r.sigma:+d}")

# %%
# With both tolerances at zero only cost-free straightening is allowed, so
# the distance is exactly the DTW distance.
exact = simplify(s1, s2)
print("zero tolerance:", len(exact.simplified), "segments, distance", exact.distance, "==", exact.dtw.distance)

# %%
# The alternative "global" merge rule spends the whole tolerance budget at
# once instead of per segment.
loose = simplify(s1, s2, spec=spec, merge_criterion="global")
print("global merge:", loose.simplified.key_points)
