"""
Chords, deviations and landmark sequences of the polygonal approximation.

Deviations are measured on the raw (source) coordinates and reported in
normalized units by scaling with the object scale sigma. Raw differences of
lattice points are exact, so threshold comparisons do not depend on how the
normalized coordinates happened to round.
"""

__all__ = [
    "Chord", "DeviationResult", "LandmarkSequence",
    "point_chord_distance", "chord_distances", "max_deviation", "sse",
    "interior_indices", "segment_deviation",
]

import math
from dataclasses import dataclass

import numpy as np

from convseg.errors import ZeroLengthChord


@dataclass(frozen=True)
class Chord:
    """Line segment L_ij between boundary points p_i and p_j (cyclic order i -> j)."""

    i: int
    j: int
    p_i: tuple
    p_j: tuple

    def __post_init__(self):
        assert self.i != self.j, "chord endpoints must be distinct indices"

    @classmethod
    def of(cls, nb, i, j):
        return cls(i, j, tuple(nb.points[i]), tuple(nb.points[j]))


@dataclass(frozen=True)
class DeviationResult:
    max_dev: float
    argmax_index: int = None

    def __post_init__(self):
        assert self.max_dev >= 0


@dataclass(frozen=True)
class LandmarkSequence:
    """Landmark boundary indices in cyclic order, plus the thresholds that produced them.

    ``tolerance`` is the error tolerance tau handed to the next stage;
    ``pass_threshold_final`` is the scan threshold T of the last pass executed.
    Both are in normalized units.
    """

    indices: tuple
    tolerance: float
    pass_threshold_final: float

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", indices)
        m = len(indices)
        assert m >= 3, f"a landmark sequence needs at least 3 landmarks, got {m}"
        assert len(set(indices)) == m, "duplicate landmark"
        descents = sum(1 for k in range(m) if indices[(k + 1) % m] < indices[k])
        assert descents == 1, f"landmarks are not in cyclic order: {indices}"

    def __len__(self):
        return len(self.indices)

    def segments(self):
        """Consecutive landmark pairs (u, v), including the closing one."""
        m = len(self.indices)
        return [(self.indices[k], self.indices[(k + 1) % m]) for k in range(m)]


def chord_distances(points, a, b):
    """Distance of each row of ``points`` to the closed segment a-b.

    Perpendicular distance where the foot of the perpendicular falls on the
    segment, Euclidean distance to the nearest endpoint otherwise.
    """
    ex, ey = b[0] - a[0], b[1] - a[1]
    length2 = ex * ex + ey * ey
    if length2 == 0:
        raise ZeroLengthChord(f"chord endpoints coincide at {tuple(a)}")
    px, py = points[:, 0] - a[0], points[:, 1] - a[1]
    t = (px * ex + py * ey) / length2
    perp = np.abs(px * ey - py * ex) / math.sqrt(length2)
    qx, qy = points[:, 0] - b[0], points[:, 1] - b[1]
    to_a = np.sqrt(px * px + py * py)
    to_b = np.sqrt(qx * qx + qy * qy)
    return np.where(t < 0, to_a, np.where(t > 1, to_b, perp))


def point_chord_distance(p_k, chord):
    a = np.asarray(chord.p_i, dtype=np.float64)
    b = np.asarray(chord.p_j, dtype=np.float64)
    return float(chord_distances(np.asarray([p_k], dtype=np.float64), a, b)[0])


def interior_indices(n, i, j):
    """Boundary indices strictly between i and j in cyclic order."""
    span = (j - i) % n
    return (i + 1 + np.arange(max(span - 1, 0))) % n


def max_deviation(nb, i, j):
    assert i % nb.n != j % nb.n, "max_deviation needs distinct endpoints"
    i, j = i % nb.n, j % nb.n
    raw = nb.raw_points
    inner = interior_indices(nb.n, i, j)
    if len(inner) == 0:
        return DeviationResult(0.0, None)
    distances = chord_distances(raw[inner], raw[i], raw[j])
    k = int(np.argmax(distances))
    return DeviationResult(float(distances[k]) * nb.sigma, int(inner[k]))


def segment_deviation(nb, u, v):
    """max_deviation value, or infinity for a degenerate (zero-length) chord."""
    try:
        return max_deviation(nb, u, v).max_dev
    except ZeroLengthChord:
        return math.inf


def sse(nb, landmarks):
    """Sum of squared chord distances over every boundary point (normalized units)."""
    raw = nb.raw_points
    squares = []
    for u, v in landmarks.segments():
        inner = interior_indices(nb.n, u, v)
        if len(inner) == 0:
            continue
        d = chord_distances(raw[inner], raw[u], raw[v]) * nb.sigma
        squares.append(d * d)
    if not squares:
        return 0.0
    return math.fsum(np.concatenate(squares))
