"""
Deterministic synthetic silhouettes for tests and demos.

Segment size is a raw boundary point count, so the classes of a generated
dataset differ in nominal size as well as in form. A digital line of length L
at angle phi traces to about L * max(|cos phi|, |sin phi|) pixels, which is
why the nominal sizes below are spaced far enough apart for their point
counts to stay disjoint under any rotation and the +-5% scale jitter.
"""

__all__ = [
    "KINDS", "CLASS_SIZES",
    "polygon_outline", "irregular_outline", "rasterize", "rot90", "translate",
    "write_mask", "make_dataset",
]

import math
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

from convseg.ingest import RasterMask
from convseg.messages import status_message

KINDS = ("square", "triangle", "star", "ellipse")

# circumradius in pixels
CLASS_SIZES = {
    "triangle": 26.0,
    "square": 50.0,
    "star": 40.0,
    "ellipse": 92.0,
}

STAR_RATIO = 0.45
ELLIPSE_ASPECT = 0.55
ELLIPSE_VERTICES = 180


def _regular(count, radius, angle):
    return [
        (radius * math.cos(angle + 2 * math.pi * k / count), radius * math.sin(angle + 2 * math.pi * k / count))
        for k in range(count)
    ]


def polygon_outline(kind, size, angle=0.0):
    """Vertices of a ``kind`` polygon with circumradius ``size``, rotated by ``angle`` radians."""
    if kind == "square":
        return _regular(4, size, angle)
    if kind == "triangle":
        return _regular(3, size, angle)
    if kind == "star":
        outer = _regular(5, size, angle)
        inner = _regular(5, size * STAR_RATIO, angle + math.pi / 5)
        return [p for pair in zip(outer, inner) for p in pair]
    if kind == "ellipse":
        c, s = math.cos(angle), math.sin(angle)
        res = []
        for k in range(ELLIPSE_VERTICES):
            t = 2 * math.pi * k / ELLIPSE_VERTICES
            x, y = size * math.cos(t), size * ELLIPSE_ASPECT * math.sin(t)
            res.append((c * x - s * y, s * x + c * y))
        return res
    raise ValueError(f"unknown shape kind {kind!r}")


def irregular_outline(rng, size=40.0, vertices=(5, 12), min_ratio=0.4):
    """Random star-shaped polygon: sorted random angles, radii between ``min_ratio`` and 1 times ``size``."""
    count = int(rng.integers(vertices[0], vertices[1] + 1))
    angles = np.sort(rng.uniform(0, 2 * math.pi, count))
    radii = rng.uniform(min_ratio * size, size, count)
    return [(float(r * math.cos(a)), float(r * math.sin(a))) for r, a in zip(radii, angles)]


def rasterize(points, margin=2):
    """Fill the polygon into a mask with ``margin`` background pixels around its bounding box."""
    pts = np.asarray(points, dtype=np.float64)
    offset = margin - np.floor(pts.min(axis=0))
    pts = pts + offset
    width, height = (np.ceil(pts.max(axis=0)) + margin + 1).astype(int)
    img = Image.new("L", (int(width), int(height)), 0)
    ImageDraw.Draw(img).polygon([tuple(p) for p in pts], fill=255)
    return RasterMask(np.asarray(img) >= 128)


def rot90(mask, k=1):
    return RasterMask(np.rot90(mask.bits, k))


def translate(mask, dx, dy):
    """Shift the content by non-negative integer offsets, growing the canvas."""
    assert dx >= 0 and dy >= 0
    return RasterMask(np.pad(mask.bits, ((dy, 0), (dx, 0))))


def write_mask(mask, path):
    """Write a binary PGM (or whatever format the suffix selects), foreground white."""
    Image.fromarray(mask.bits.astype(np.uint8) * 255).save(path)


def make_dataset(directory, per_class=10, seed=0, kinds=KINDS, size=None):
    """Write ``<kind>-<k>.pgm`` files under random rotation, translation and scale jitter.

    Every class has its own nominal size from CLASS_SIZES unless ``size`` gives
    one circumradius for all of them.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    paths = []
    for kind in kinds:
        for k in range(1, per_class + 1):
            radius = (size or CLASS_SIZES[kind]) * rng.uniform(0.95, 1.05)
            angle = rng.uniform(0, 2 * math.pi)
            mask = rasterize(polygon_outline(kind, radius, angle), margin=2)
            mask = translate(mask, int(rng.integers(0, 8)), int(rng.integers(0, 8)))
            path = directory / f"{kind}-{k}.pgm"
            write_mask(mask, path)
            paths.append(path)
    status_message(f"Wrote {len(paths)} synthetic shapes to {directory}.")
    return paths
