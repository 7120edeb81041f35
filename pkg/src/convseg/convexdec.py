"""
Approximately convex decomposition of a landmark cycle.

A landmark whose turn is negative under counterclockwise traversal is concave
and splits the cycle. Segments run from one concave landmark to the next; their
boundary ranges are half-open so that the segment sizes partition the boundary.
"""

__all__ = ["ApproxConvexSegment", "ConvexDecomposition", "turn_z", "concave_points", "decompose"]

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ApproxConvexSegment:
    """Cyclic run of landmarks from ``start_lm`` to ``end_lm`` (positions in the landmark sequence).

    ``boundary_range`` is ``(start, stop)`` in boundary indices, half-open and
    cyclic; a closed segment has ``start == stop`` and spans the whole cycle.
    """

    start_lm: int
    end_lm: int
    boundary_range: tuple
    closed: bool = False

    def size(self, n):
        start, stop = self.boundary_range
        return n if self.closed else (stop - start) % n

    def indices(self, n):
        """Boundary indices of the half-open range."""
        start = self.boundary_range[0]
        return (start + np.arange(self.size(n))) % n

    def point_indices(self, n):
        """Boundary indices from the start landmark through the end landmark, both included.

        For a closed segment the shared endpoint appears at both ends.
        """
        start = self.boundary_range[0]
        return (start + np.arange(self.size(n) + 1)) % n

    def landmark_positions(self, m):
        span = m if self.closed else (self.end_lm - self.start_lm) % m
        return [(self.start_lm + k) % m for k in range(span + 1)]


@dataclass(frozen=True)
class ConvexDecomposition:
    segments: tuple
    landmark_source: object

    def __len__(self):
        return len(self.segments)


def turn_z(S_a, S_b, S_c):
    """z component of (S_a - S_b) x (S_b - S_c); negative means S_b is concave."""
    ux, uy = S_a[0] - S_b[0], S_a[1] - S_b[1]
    vx, vy = S_b[0] - S_c[0], S_b[1] - S_c[1]
    return ux * vy - uy * vx


def concave_points(nb, landmarks):
    """Positions in ``landmarks`` whose turn is strictly negative."""
    raw = nb.raw_points
    lm = landmarks.indices
    m = len(lm)
    assert m >= 3
    return [
        k for k in range(m)
        if turn_z(raw[lm[k - 1]], raw[lm[k]], raw[lm[(k + 1) % m]]) < 0
    ]


def decompose(nb, landmarks):
    lm = landmarks.indices
    concave = concave_points(nb, landmarks)
    if len(concave) <= 1:
        anchor = concave[0] if concave else 0
        segment = ApproxConvexSegment(anchor, anchor, (lm[anchor], lm[anchor]), closed=True)
        return ConvexDecomposition((segment,), landmarks)
    segments = []
    for t, a in enumerate(concave):
        b = concave[(t + 1) % len(concave)]
        segments.append(ApproxConvexSegment(a, b, (lm[a], lm[b])))
    return ConvexDecomposition(tuple(segments), landmarks)
