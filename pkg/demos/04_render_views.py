"""
Rendering the three views as SVG
================================

Writes the segmented view (connectors at key points, compression blocks
and amplitude shading), the classic point-to-point view and the cost
matrix with both paths on top into ``demos/output/``.
"""
# %%
import pathlib

from subwarp import RenderSpec, ToleranceSpec, render_matrix_paths, render_point_to_point, render_segmented
from subwarp import report, simplify
from subwarp.fixtures import segmented_showcase
from subwarp.svg import write_svg

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

s1, s2 = segmented_showcase()
result = simplify(s1, s2, spec=ToleranceSpec(gamma_abs=0.3, gamma_rel=0.05))
reports, band = report(result.simplified, s1, s2)

# %%
# The segmented view: one orange block per segment that gains or loses
# samples, |K| samples wide.
write_svg(render_segmented(s1, s2, result.simplified, reports, band), out / "showcase_segmented.svg")

# %%
# The classic view draws every match; ``stride`` thins it out.
write_svg(render_point_to_point(s1, s2, result.dtw.path, RenderSpec(stride=3)), out / "showcase_matches.svg")

# %%
# The cost matrix: light cells are cheap. Red is the optimal path, green
# the simplified one.
matrix = render_matrix_paths(result.dtw.cost_matrix,
                             [(result.dtw.path, "optimal"), (result.simplified, "simplified")])
write_svg(matrix, out / "showcase_matrix.svg")
print("wrote", sorted(p.name for p in out.glob("showcase_*.svg")))

# %%
# Colours and canvas size come from ``RenderSpec``.
dark = RenderSpec(width=600, height=300, series1="#000000", compression="#9467bd")
write_svg(render_segmented(s1, s2, result.simplified, reports, band, dark), out / "showcase_custom.svg")
