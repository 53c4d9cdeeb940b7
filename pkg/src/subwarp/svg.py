"""
subwarp.svg
~~~~~~~~~~~

Standalone SVG renderings of an alignment:

* :func:`render_segmented` draws the two series with one connector per key
  point, a compression block per segment and the amplitude band around the
  first series;
* :func:`render_point_to_point` draws a connector for every (or every
  ``stride``-th) matched pair;
* :func:`render_matrix_paths` draws the cost matrix as a heat map with
  warping paths on top.

Output is deterministic: all coordinates are written with three decimals
and styling is inline.
"""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, fields
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .metrics import AmplitudeBand, SegmentReport
from .path import WarpingPath
from .series import InputError, as_series

SVG_NS = "http://www.w3.org/2000/svg"

# heat scale end points: small costs light, large costs dark
_LIGHT = (255, 255, 229)
_DARK = (8, 48, 107)


@dataclass(frozen=True)
class RenderSpec:
    """Canvas size and colours shared by all renderers.

    ``gap`` is the vertical space between the two series panels; ``stride``
    thins the point-to-point view to every ``stride``-th match.
    """

    width: float = 900.0
    height: float = 360.0
    gap: float = 90.0
    margin: float = 20.0
    series1: str = "#1f77b4"
    series2: str = "#2a2a2a"
    connector: str = "#8c8c8c"
    compression: str = "#ff7f0e"
    amplitude: str = "#ffbb78"
    optimal: str = "#d62728"
    simplified: str = "#2ca02c"
    stride: int = 1

    def __post_init__(self):
        for name in ("width", "height"):
            if not getattr(self, name) > 0:
                raise InputError(f"{name} must be positive, got {getattr(self, name)}")
        for name in ("gap", "margin"):
            if not getattr(self, name) >= 0:
                raise InputError(f"{name} must be non-negative, got {getattr(self, name)}")
        if 2 * self.margin >= min(self.width, self.height):
            raise InputError("margin leaves no drawing area")
        if self.height - 2 * self.margin - self.gap <= 0:
            raise InputError("gap leaves no room for the series panels")
        if not isinstance(self.stride, (int, np.integer)) or self.stride < 1:
            raise InputError(f"stride must be an integer >= 1, got {self.stride!r}")

    def color(self, role: str) -> str:
        if role not in COLOR_ROLES:
            raise InputError(f"unknown colour role {role!r}; expected one of {COLOR_ROLES}")
        return getattr(self, role)


COLOR_ROLES = tuple(f.name for f in fields(RenderSpec) if f.type == "str")


def _num(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _points(xs, ys) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in zip(xs, ys))


def _document(width: float, height: float, title: str) -> ET.Element:
    root = ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": _num(width),
        "height": _num(height),
        "viewBox": f"0 0 {_num(width)} {_num(height)}",
    })
    ET.SubElement(root, "title").text = title
    return root


def _serialize(root: ET.Element) -> str:
    ET.indent(root, space=" ")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


class _PairLayout:
    """Affine maps from (sample index, value) to screen coordinates for
    two vertically stacked panels sharing one x axis and one value range.
    """

    def __init__(self, spec: RenderSpec, n: int, m: int, values: Sequence[np.ndarray]):
        self.spec = spec
        span = max(n, m) - 1
        inner = spec.width - 2 * spec.margin
        self.px = inner / span if span > 0 else inner
        lo = min(float(np.min(v)) for v in values)
        hi = max(float(np.max(v)) for v in values)
        if hi - lo <= 0:
            lo, hi = lo - 1.0, hi + 1.0
        self.lo, self.hi = lo, hi
        self.panel = (spec.height - 2 * spec.margin - spec.gap) / 2
        self.top1 = spec.margin
        self.top2 = spec.margin + self.panel + spec.gap

    def x(self, idx):
        return self.spec.margin + (np.asarray(idx, dtype=np.float64) - 1) * self.px

    def _y(self, v, top):
        return top + (self.hi - np.asarray(v, dtype=np.float64)) / (self.hi - self.lo) * self.panel

    def y1(self, v):
        return self._y(v, self.top1)

    def y2(self, v):
        return self._y(v, self.top2)


def _univariate(s1, s2):
    s1 = as_series(s1)
    s2 = as_series(s2)
    if not (s1.is_univariate and s2.is_univariate):
        raise InputError("rendering needs univariate series")
    return s1, s2


def _draw_series(root, layout: _PairLayout, s1, s2):
    spec = layout.spec
    for gid, s, ymap, color in (("series1", s1, layout.y1, spec.series1),
                                ("series2", s2, layout.y2, spec.series2)):
        g = ET.SubElement(root, "g", {"id": gid})
        idx = np.arange(1, len(s) + 1)
        ET.SubElement(g, "polyline", {
            "points": _points(layout.x(idx), ymap(s.values)),
            "style": f"fill:none;stroke:{color};stroke-width:1.5",
        })


def _connector(g, layout: _PairLayout, s1, s2, i: int, j: int):
    ET.SubElement(g, "line", {
        "x1": _num(layout.x(i)), "y1": _num(layout.y1(s1(i))),
        "x2": _num(layout.x(j)), "y2": _num(layout.y2(s2(j))),
        "style": f"stroke:{layout.spec.connector};stroke-width:1",
    })


def _check_consistent(s1, s2, simplified, reports: Sequence[SegmentReport], band: Optional[AmplitudeBand]):
    keys = simplified.key_points
    if keys[0] != (1, 1) or keys[-1] != (len(s1), len(s2)):
        raise InputError(f"key points run from {keys[0]} to {keys[-1]}, expected (1, 1) to {(len(s1), len(s2))}")
    if len(reports) != len(keys) - 1:
        raise InputError(f"{len(reports)} reports for {len(keys) - 1} segments")
    for r, q0, q1 in zip(reports, keys[:-1], keys[1:]):
        if (r.b, r.b2) != q0 or (r.e, r.e2) != q1:
            raise InputError(f"report {(r.b, r.e, r.b2, r.e2)} does not match segment {q0} -> {q1}")
    if band is not None and (band.alpha.shape != (len(s1),) or band.beta.shape != (len(s1),)):
        raise InputError("amplitude band length differs from the first series")


def render_segmented(s1, s2, simplified, reports: Sequence[SegmentReport],
                     band: Optional[AmplitudeBand], spec: RenderSpec = RenderSpec()) -> str:
    """Segment-level view of an alignment.

    Connectors are drawn at key points only. Each segment with ``K != 0``
    gets a block ``|K|`` samples wide, centred on the midpoint of the
    shorter side and placed in the gap between the series. The amplitude
    band is a polygon spanning ``[s1(i) - beta(i), s1(i) + alpha(i)]``.
    """
    s1, s2 = _univariate(s1, s2)
    _check_consistent(s1, s2, simplified, reports, band)
    values = [s1.values, s2.values]
    if band is not None:
        lower, upper = band.bounds(s1)
        values += [lower, upper]
    layout = _PairLayout(spec, len(s1), len(s2), values)
    root = _document(spec.width, spec.height, f"{s1.name or 's1'} vs {s2.name or 's2'}: segments")

    if band is not None:
        g = ET.SubElement(root, "g", {"id": "amplitude"})
        idx = np.arange(1, len(s1) + 1)
        xs = np.concatenate([layout.x(idx), layout.x(idx[::-1])])
        ys = np.concatenate([layout.y1(upper), layout.y1(lower[::-1])])
        ET.SubElement(g, "polygon", {
            "points": _points(xs, ys),
            "style": f"fill:{spec.amplitude};fill-opacity:0.6;stroke:none",
        })
    _draw_series(root, layout, s1, s2)

    g = ET.SubElement(root, "g", {"id": "connectors"})
    for i, j in simplified.key_points:
        _connector(g, layout, s1, s2, i, j)

    g = ET.SubElement(root, "g", {"id": "compression"})
    block_h = spec.gap * 0.3
    block_y = layout.top1 + layout.panel + (spec.gap - block_h) / 2
    for r in reports:
        if r.K == 0:
            continue
        # the shorter side is s2 when K < 0, s1 when K > 0
        centre = (layout.x(r.b2) + layout.x(r.e2)) / 2 if r.K < 0 else (layout.x(r.b) + layout.x(r.e)) / 2
        w = abs(r.K) * layout.px
        ET.SubElement(g, "rect", {
            "x": _num(centre - w / 2), "y": _num(block_y),
            "width": _num(w), "height": _num(block_h),
            "data-k": str(r.K),
            "style": f"fill:{spec.compression};stroke:none",
        })
    return _serialize(root)


def connector_positions(L: int, stride: int) -> List[int]:
    """1-based path positions shown by the point-to-point view."""
    pos = list(range(1, L + 1, stride))
    if pos[-1] != L:
        pos.append(L)
    return pos


def render_point_to_point(s1, s2, path: WarpingPath, spec: RenderSpec = RenderSpec()) -> str:
    """Classic view with a connector for every ``spec.stride``-th matched pair.

    The first and the last pair are always drawn.
    """
    s1, s2 = _univariate(s1, s2)
    violation = path.validate(len(s1), len(s2))
    if violation is not None:
        raise InputError(f"invalid warping path: {violation}")
    layout = _PairLayout(spec, len(s1), len(s2), [s1.values, s2.values])
    root = _document(spec.width, spec.height, f"{s1.name or 's1'} vs {s2.name or 's2'}: matches")
    _draw_series(root, layout, s1, s2)
    g = ET.SubElement(root, "g", {"id": "connectors"})
    for k in connector_positions(len(path), spec.stride):
        i, j = path.point(k)
        _connector(g, layout, s1, s2, i, j)
    return _serialize(root)


def heat_color(value: float, lo: float, hi: float) -> str:
    """Linear light-to-dark colour for ``value`` clamped to ``[lo, hi]``."""
    t = 0.0 if hi <= lo else min(max((value - lo) / (hi - lo), 0.0), 1.0)
    rgb = (round(a + (b - a) * t) for a, b in zip(_LIGHT, _DARK))
    return "#" + "".join(f"{c:02x}" for c in rgb)


def _vertices(path) -> List[Tuple[int, int]]:
    keys = getattr(path, "key_points", None)
    if keys is not None:
        return list(keys)
    if isinstance(path, WarpingPath):
        return path.to_list()
    raise InputError(f"expected a WarpingPath or SimplifiedPath, got {type(path).__name__}")


def render_matrix_paths(C: np.ndarray, paths: Sequence[Tuple[object, str]] = (),
                        spec: RenderSpec = RenderSpec()) -> str:
    """Heat map of a cost matrix with paths drawn through the cell centres.

    Row ``i`` of the matrix is drawn top to bottom, column ``j`` left to
    right. ``paths`` pairs a :class:`WarpingPath` or a simplified path (whose
    key points become the polyline vertices) with a colour role such as
    ``"optimal"`` or ``"simplified"``.
    """
    C = np.asarray(C, dtype=np.float64)
    if C.ndim != 2 or 0 in C.shape:
        raise InputError(f"cost matrix must be a non-empty 2-D array, got shape {C.shape}")
    if not np.all(np.isfinite(C)):
        raise InputError("cost matrix contains non-finite values")
    n, m = C.shape
    prepared = []
    for p, role in paths:
        color = spec.color(role)
        full = p.rasterize() if hasattr(p, "rasterize") else p
        violation = full.validate(n, m)
        if violation is not None:
            raise InputError(f"path does not fit the {n}x{m} matrix: {violation}")
        prepared.append((_vertices(p), role, color))

    cell = min((spec.width - 2 * spec.margin) / m, (spec.height - 2 * spec.margin) / n)
    root = _document(spec.width, spec.height, f"cost matrix {n}x{m}")
    g = ET.SubElement(root, "g", {"id": "matrix"})
    lo, hi = float(C.min()), float(C.max())
    for r in range(n):
        y = _num(spec.margin + r * cell)
        for c in range(m):
            ET.SubElement(g, "rect", {
                "x": _num(spec.margin + c * cell), "y": y,
                "width": _num(cell), "height": _num(cell),
                "style": f"fill:{heat_color(C[r, c], lo, hi)};stroke:none",
            })
    g = ET.SubElement(root, "g", {"id": "paths"})
    for verts, role, color in prepared:
        v = np.asarray(verts, dtype=np.float64)
        xs = spec.margin + (v[:, 1] - 0.5) * cell
        ys = spec.margin + (v[:, 0] - 0.5) * cell
        ET.SubElement(g, "polyline", {
            "points": _points(xs, ys),
            "data-role": role,
            "style": f"fill:none;stroke:{color};stroke-width:2",
        })
    return _serialize(root)


def write_svg(document: str, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(document)
