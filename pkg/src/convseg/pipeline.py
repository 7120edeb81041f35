"""
Glue between the stages: file -> closed boundary -> normalized boundary ->
landmarks -> approximately convex decomposition -> feature profile.
"""

__all__ = ["ShapeAnalysis", "load_boundary", "prepare", "analyze_boundary", "analyze"]

from pathlib import Path
from typing import NamedTuple

from convseg.messages import debug_message
from convseg.ingest import (
    POINT_SUFFIXES,
    ClosedBoundary,
    NormalizedBoundary,
    read_mask,
    read_points,
    trace_boundary,
    orient_ccw,
    normalize,
    canonical_start,
)
from convseg.approx import ApproxConfig, ApproxStages, approximate_stages
from convseg.convexdec import ConvexDecomposition, decompose
from convseg.features import FeatureProfile, profile


class ShapeAnalysis(NamedTuple):
    boundary: ClosedBoundary
    normalized: NormalizedBoundary
    stages: ApproxStages
    decomposition: ConvexDecomposition
    profile: FeatureProfile

    @property
    def landmarks(self):
        return self.stages.phase3


def load_boundary(path, invert=False):
    """Closed, counterclockwise boundary from a point list or a raster file."""
    path = Path(path)
    if path.suffix.lower() in POINT_SUFFIXES:
        boundary = read_points(path)
    else:
        boundary = trace_boundary(read_mask(path, invert=invert))
    return orient_ccw(boundary)


def prepare(boundary):
    return canonical_start(normalize(boundary))


def analyze_boundary(boundary, cfg, shape_id=""):
    nb = prepare(boundary)
    stages = approximate_stages(nb, cfg)
    decomposition = decompose(nb, stages.phase3)
    result = profile(nb, decomposition, shape_id)
    debug_message(f"{shape_id or 'shape'}: n={nb.n} landmarks={len(stages.phase3)} segments={len(result)}")
    return ShapeAnalysis(boundary, nb, stages, decomposition, result)


def analyze(path, cfg=ApproxConfig(), invert=False):
    path = Path(path)
    return analyze_boundary(load_boundary(path, invert), cfg, shape_id=path.stem)
