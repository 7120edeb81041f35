"""
Descriptive features of approximately convex segments.

Each segment is described by five numbers: its size n (boundary points in the
half-open range), the count x of local extrema of the distance to the segment
centroid, the area a enclosed between the segment and its base chord, the base
width b and the height h. n and x are raw counts; a, b and h are measured in
the unit-perimeter frame.
"""

__all__ = [
    "SegmentFeatures", "FeatureProfile",
    "segment_size", "extreme_point_count", "segment_area", "base_width", "segment_height",
    "segment_features", "profile",
]

import math
from dataclasses import dataclass, astuple

import numpy as np

from convseg.errors import TooFewPoints
from convseg.approx.segments import chord_distances

# distances closer than this are one plateau; endpoints closer than this coincide
EPS = 1e-12


@dataclass(frozen=True)
class SegmentFeatures:
    n: int
    x: int
    a: float
    b: float
    h: float

    def __post_init__(self):
        assert self.n >= 0 and self.x >= 0 and self.a >= 0 and self.b >= 0 and self.h >= 0

    def as_tuple(self):
        return astuple(self)


ZERO_SEGMENT = SegmentFeatures(0, 0, 0.0, 0.0, 0.0)


def _sort_key(f):
    return (-f.n, -f.a, -f.b)


@dataclass(frozen=True)
class FeatureProfile:
    """Segment features sorted descending by size (ties: larger area, then larger base first)."""

    segments: tuple
    shape_id: str = ""

    def __post_init__(self):
        segments = tuple(self.segments)
        object.__setattr__(self, "segments", segments)
        keys = [_sort_key(f) for f in segments]
        assert keys == sorted(keys), "feature profile is not sorted"

    def __len__(self):
        return len(self.segments)

    def total_size(self):
        return sum(f.n for f in self.segments)


def _points(nb, segment):
    if segment.closed:
        return nb.points[segment.indices(nb.n)]
    return nb.points[segment.point_indices(nb.n)]


def segment_size(nb, segment):
    return segment.size(nb.n)


def _runs(values):
    runs = [values[0]]
    for v in values[1:]:
        if abs(v - runs[-1]) > EPS:
            runs.append(v)
    return runs


def extreme_point_count(nb, segment):
    """Number of strict local minima and maxima of the distance to the segment centroid.

    Equal consecutive distances are compressed into one run first. Open segments
    never count their first or last run; closed segments wrap around.
    """
    pts = _points(nb, segment)
    if len(pts) < 3:
        raise TooFewPoints(f"extreme points need at least 3 segment points, got {len(pts)}")
    c = pts.mean(axis=0)
    runs = _runs(list(np.hypot(pts[:, 0] - c[0], pts[:, 1] - c[1])))
    if segment.closed:
        if len(runs) > 1 and abs(runs[-1] - runs[0]) <= EPS:
            runs.pop()
        if len(runs) < 2:
            return 0
        r = len(runs)
        neighbors = [(runs[k - 1], runs[k], runs[(k + 1) % r]) for k in range(r)]
    else:
        neighbors = [(runs[k - 1], runs[k], runs[k + 1]) for k in range(1, len(runs) - 1)]
    return sum(1 for lo, v, hi in neighbors if (v > lo and v > hi) or (v < lo and v < hi))


def segment_area(nb, segment):
    """Shoelace area of the segment points closed by the base chord."""
    pts = _points(nb, segment)
    if len(pts) < 3:
        return 0.0
    x, y = pts[:, 0], pts[:, 1]
    return abs(0.5 * math.fsum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def base_width(nb, segment):
    if segment.closed:
        return 0.0
    pts = _points(nb, segment)
    b = math.hypot(*(pts[-1] - pts[0]))
    return 0.0 if b <= EPS else b


def segment_height(nb, segment):
    pts = _points(nb, segment)
    if base_width(nb, segment) > 0:
        return float(chord_distances(pts, pts[0], pts[-1]).max())
    rel = pts - pts[0]
    return float(np.hypot(rel[:, 0], rel[:, 1]).max())


def segment_features(nb, segment):
    try:
        x = extreme_point_count(nb, segment)
    except TooFewPoints:
        x = 0
    return SegmentFeatures(
        n=segment_size(nb, segment),
        x=x,
        a=segment_area(nb, segment),
        b=base_width(nb, segment),
        h=segment_height(nb, segment),
    )


def profile(nb, decomposition, shape_id=""):
    features = [segment_features(nb, s) for s in decomposition.segments]
    features.sort(key=_sort_key)
    result = FeatureProfile(tuple(features), shape_id)
    assert result.total_size() == nb.n
    return result
