"""
Boundary ingestion: load silhouette rasters or point lists, trace the outer
contour of the dominant object, and normalize it.

Coordinates of traced boundaries are pixel centers (x = column, y = row).
Since rows grow downwards, "counterclockwise" refers to positive shoelace
area in these coordinates, which is what the convexity test relies on.
"""

__all__ = [
    "RasterMask", "ClosedBoundary", "NormalizedBoundary",
    "read_mask", "read_points", "trace_boundary", "orient_ccw", "signed_area",
    "centroid", "perimeter", "normalize", "canonical_start",
    "IMAGE_SUFFIXES", "POINT_SUFFIXES",
]

import math
from dataclasses import dataclass

import numpy as np
from PIL import Image
from scipy import ndimage

from convseg.errors import (
    EmptyMask,
    DegenerateComponent,
    ZeroArea,
    ZeroPerimeter,
    PointListSyntaxError,
)


IMAGE_SUFFIXES = {".pbm", ".pgm", ".ppm", ".pnm", ".png", ".gif", ".bmp"}
POINT_SUFFIXES = {".txt", ".pts", ".csv"}

GRAY_THRESHOLD = 128
# distances within this margin of the maximum count as ties for the canonical start
TIE_EPS = 1e-12


def _frozen_array(a):
    a = np.array(a, dtype=np.float64)
    a.setflags(write=False)
    return a


# -- Domain types --

@dataclass(frozen=True, eq=False)
class RasterMask:
    """Row-major foreground grid; ``bits[y, x]`` is True for foreground."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=bool)
        assert bits.ndim == 2 and bits.shape[0] >= 1 and bits.shape[1] >= 1, f"bad mask shape {bits.shape}"
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def width(self):
        return self.bits.shape[1]

    @property
    def height(self):
        return self.bits.shape[0]

    def count(self):
        return int(self.bits.sum())


@dataclass(frozen=True, eq=False)
class ClosedBoundary:
    """Cyclic list of distinct-consecutive 2D points, shape (n, 2)."""

    points: np.ndarray

    def __post_init__(self):
        points = _frozen_array(self.points)
        assert points.ndim == 2 and points.shape[1] == 2, f"bad point array shape {points.shape}"
        if len(points) < 3:
            raise DegenerateComponent(f"a closed boundary needs at least 3 points, got {len(points)}")
        assert not np.any(np.all(points == np.roll(points, -1, axis=0), axis=1)), "consecutive duplicate points"
        object.__setattr__(self, "points", points)

    @classmethod
    def from_points(cls, points):
        """Build a boundary, dropping consecutive (and wrap-around) duplicates."""
        pts = [tuple(p) for p in np.asarray(points, dtype=np.float64).reshape(-1, 2)]
        dedup = []
        for p in pts:
            if not dedup or dedup[-1] != p:
                dedup.append(p)
        while len(dedup) > 1 and dedup[0] == dedup[-1]:
            dedup.pop()
        return cls(np.array(dedup, dtype=np.float64).reshape(-1, 2))

    @property
    def n(self):
        return len(self.points)


@dataclass(frozen=True, eq=False)
class NormalizedBoundary:
    """Boundary translated to its center of mass and scaled to unit perimeter.

    ``raw_points`` keeps the source coordinates in the same (possibly rotated)
    order, so geometric predicates can be evaluated on exact input values.
    """

    points: np.ndarray
    raw_points: np.ndarray
    centroid_original: tuple
    sigma: float
    start_index_original: int = 0

    def __post_init__(self):
        object.__setattr__(self, "points", _frozen_array(self.points))
        object.__setattr__(self, "raw_points", _frozen_array(self.raw_points))
        assert self.points.shape == self.raw_points.shape and len(self.points) >= 3
        assert self.sigma > 0

    @property
    def n(self):
        return len(self.points)


# -- Loading --

def read_mask(path, invert=False):
    """Read a raster through Pillow.

    PBM (bilevel) files use their own convention: set bits are foreground.
    Everything else is converted to 8-bit gray and thresholded at 128.
    """
    with Image.open(path) as img:
        bilevel = img.mode == "1"
        gray = np.asarray(img.convert("L"))
    bits = gray < GRAY_THRESHOLD if bilevel else gray >= GRAY_THRESHOLD
    if invert:
        bits = ~bits
    return RasterMask(bits)


def read_points(path):
    """Read a UTF-8 point list: one ``x,y`` pair per line, ``#`` starts a comment line."""
    points = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise PointListSyntaxError(f"{path}:{lineno}: expected 'x,y', got {line!r}")
            try:
                points.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise PointListSyntaxError(f"{path}:{lineno}: not a pair of reals: {line!r}") from None
    return ClosedBoundary.from_points(points)


# -- Tracing --

# Moore neighborhood in clockwise screen order (y grows downwards), starting west
_MOORE = ((-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1), (0, 1), (-1, 1))
_EIGHT = np.ones((3, 3), dtype=bool)


def largest_component(mask):
    labels, count = ndimage.label(mask.bits, structure=_EIGHT)
    if count == 0:
        raise EmptyMask("mask has no foreground pixel")
    sizes = np.bincount(labels.ravel())[1:]
    # argmax picks the first maximum, i.e. the component met first in raster order
    return labels == (int(np.argmax(sizes)) + 1)


def _moore_trace(component):
    padded = np.pad(component, 1)
    rows, cols = np.nonzero(padded)
    start = (int(cols[0]), int(rows[0]))
    back = (start[0] - 1, start[1])
    current = start
    contour = [start]
    seen = {(start, back)}
    while True:
        k0 = _MOORE.index((back[0] - current[0], back[1] - current[1]))
        prev, nxt = back, None
        for step in range(8):
            dx, dy = _MOORE[(k0 + step) % 8]
            cand = (current[0] + dx, current[1] + dy)
            if padded[cand[1], cand[0]]:
                nxt = cand
                break
            prev = cand
        if nxt is None:
            break  # isolated pixel
        current, back = nxt, prev
        # Jacob's stopping criterion: the start state recurs. Any other recurring
        # state (thin two-pixel components) ends the trace as well.
        if (current, back) in seen:
            break
        seen.add((current, back))
        contour.append(current)
    return [(x - 1, y - 1) for x, y in contour]


def trace_boundary(mask):
    """Outer contour of the largest 8-connected component, as pixel centers."""
    if mask.count() == 0:
        raise EmptyMask("mask has no foreground pixel")
    contour = _moore_trace(largest_component(mask))
    try:
        return ClosedBoundary.from_points(contour)
    except DegenerateComponent:
        raise DegenerateComponent(f"largest component traces to {len(set(contour))} boundary point(s)") from None


# -- Orientation and normalization --

def signed_area(points):
    x, y = points[:, 0], points[:, 1]
    return 0.5 * math.fsum(x * np.roll(y, -1) - np.roll(x, -1) * y)


def orient_ccw(boundary):
    area = signed_area(boundary.points)
    if area == 0:
        raise ZeroArea("boundary points are collinear")
    if area > 0:
        return boundary
    return ClosedBoundary(boundary.points[::-1])


def centroid(boundary):
    """Arithmetic mean of the boundary points (not the area centroid)."""
    pts = boundary.points
    n = len(pts)
    return (math.fsum(pts[:, 0]) / n, math.fsum(pts[:, 1]) / n)


def edge_lengths(points):
    d = np.roll(points, -1, axis=0) - points
    return np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])


def perimeter(boundary):
    # fsum makes the result independent of where the cycle starts
    return math.fsum(edge_lengths(boundary.points))


def normalize(boundary):
    length = perimeter(boundary)
    if not length > 0:
        raise ZeroPerimeter("boundary has zero perimeter")
    sigma = 1.0 / length
    xc, yc = centroid(boundary)
    points = (boundary.points - np.array([xc, yc])) * sigma
    return NormalizedBoundary(
        points=points,
        raw_points=boundary.points,
        centroid_original=(xc, yc),
        sigma=sigma,
    )


def canonical_start(nb):
    """Rotate the cycle so index 0 is the point farthest from the origin."""
    d = np.hypot(nb.points[:, 0], nb.points[:, 1])
    k = int(np.flatnonzero(d >= d.max() - TIE_EPS)[0])
    if k == 0:
        return nb
    return NormalizedBoundary(
        points=np.roll(nb.points, -k, axis=0),
        raw_points=np.roll(nb.raw_points, -k, axis=0),
        centroid_original=nb.centroid_original,
        sigma=nb.sigma,
        start_index_original=(nb.start_index_original + k) % nb.n,
    )
