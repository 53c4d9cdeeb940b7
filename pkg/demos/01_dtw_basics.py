"""
Aligning two series with DTW
============================

Builds the cost matrix and the accumulated cost matrix for two short
series, extracts the optimal warping path and checks it against a brute
force search over all warping paths.
"""
# %%
# Two short series; the second one lingers on its first value.
import numpy as np

import subwarp

s1 = np.array([0.0, 2.0, 1.0, 3.0])
s2 = np.array([0.0, 0.0, 2.5, 1.0, 3.0])

result = subwarp.dtw(s1, s2)
print("cost matrix:\n", result.cost_matrix)
print("accumulated:\n", result.accumulated)
print("optimal path:", result.path.to_list())
print(f"DTW cost {result.cost}, distance {result.distance}")

# %%
# The default local cost is the squared difference. Any p-norm raised to a
# power >= 1 works; lambda = p = 1 gives the absolute difference.
manhattan = subwarp.dtw(s1, s2, subwarp.CostFunction(1, 1))
print("absolute-difference DTW distance:", manhattan.distance)

# %%
# A warping path must start at (1, 1), end at (n, m) and move in unit
# steps. ``validate_path`` names the first rule that breaks.
broken = subwarp.WarpingPath.from_pairs([(1, 1), (2, 2), (2, 1), (4, 5)])
print(subwarp.validate_path(broken, 4, 5))

# %%
# The self-check used by ``subwarp verify`` compares DTW against an
# exhaustive enumeration on tiny grids.
from subwarp.verify import dtw_oracle_suite

print(dtw_oracle_suite(seed=1, pairs=100).summary())
