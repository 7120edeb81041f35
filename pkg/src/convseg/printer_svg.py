"""
SVG renderings of a shape analysis, in the unit-perimeter frame.

The raw boundary is drawn as a grey path; every segment (of the landmark
polygon, or of the convex decomposition) gets a path of its own, colored by
cycling PALETTE. See docs/palette.md.
"""

__all__ = ["PALETTE", "BOUNDARY_COLOR", "STAGES", "SvgPrinter"]

import svgwrite

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a",
)
BOUNDARY_COLOR = "#b0b0b0"
STAGES = ("landmarks", "convex")

# normalized boundaries have unit perimeter and are centered, so they fit
VIEWBOX = "-0.5 -0.5 1 1"
SIZE_PX = 512


def _coord(p):
    return f"{float(p[0]):.6f} {float(p[1]):.6f}"


def _path_data(points, closed=False):
    head, *tail = points
    d = "M " + _coord(head) + "".join(" L " + _coord(p) for p in tail)
    return d + " Z" if closed else d


class SvgPrinter:
    def __init__(self, outpath, analysis, stage="landmarks"):
        assert stage in STAGES, f"unknown stage {stage!r}"
        nb = analysis.normalized
        dwg = svgwrite.Drawing(size=(f"{SIZE_PX}px", f"{SIZE_PX}px"), viewBox=VIEWBOX, profile="full", debug=False)
        dwg.add(dwg.path(
            d=_path_data(nb.points, closed=True),
            fill="none", stroke=BOUNDARY_COLOR, stroke_width=0.002, class_="boundary",
        ))
        segments = self.landmark_segments(analysis) if stage == "landmarks" else self.convex_segments(analysis)
        for k, (points, closed) in enumerate(segments):
            dwg.add(dwg.path(
                d=_path_data(points, closed),
                fill="none", stroke=PALETTE[k % len(PALETTE)], stroke_width=0.005,
                stroke_linecap="round", class_="segment", id=f"seg{k}",
            ))
        with outpath.open("w", encoding="utf-8") as fh:
            dwg.write(fh, pretty=True)
            fh.write("\n")

    @staticmethod
    def landmark_segments(analysis):
        pts = analysis.normalized.points
        return [([pts[u], pts[v]], False) for u, v in analysis.landmarks.segments()]

    @staticmethod
    def convex_segments(analysis):
        nb = analysis.normalized
        res = []
        for segment in analysis.decomposition.segments:
            if segment.closed:
                res.append((nb.points[segment.indices(nb.n)], True))
            else:
                res.append((nb.points[segment.point_indices(nb.n)], False))
        return res
