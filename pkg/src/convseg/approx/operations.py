"""
The operations module contains the individual stages of the polygonal
approximation: one sequential scan pass, and the three deletion phases that
remove pseudo landmark points afterwards.
convseg.approx.pipeline chains them together.
"""

__all__ = [
    "scan_pass", "pad_landmarks",
    "delete_phase1", "delete_phase2", "delete_phase3", "delete_weak_segments",
    "vertex_cosine",
]

import math
import heapq
from dataclasses import replace

import numpy as np

from convseg.errors import ZeroLengthChord, ZeroLengthArm, TooFewPoints
from convseg.approx.segments import (
    LandmarkSequence,
    chord_distances,
    interior_indices,
    segment_deviation,
)


# -- Sequential scan --

def _exceeds(nb, start, stop, T):
    # chord start -> stop with stop <= n (index n wraps to 0); interior needs no wrap
    raw = nb.raw_points
    inner = raw[start + 1 : stop]
    if len(inner) == 0:
        return False
    try:
        d = chord_distances(inner, raw[start], raw[stop % nb.n])
    except ZeroLengthChord:
        return True  # the boundary loops back onto the fixed point
    return float(d.max()) * nb.sigma > T


def scan_pass(nb, T, min_landmarks=3):
    """One pass of sequential scan merging at threshold T (normalized units).

    Starting at index 0, points are merged while the chord from the fixed point
    deviates from the curve by at most T. The pass ends once the scan comes
    back to the first landmark.
    """
    assert T > 0
    n = nb.n
    landmarks = [0]
    start = 0
    while True:
        j = start + 1
        while j < n and not _exceeds(nb, start, j + 1, T):
            j += 1
        if j >= n:
            break
        landmarks.append(j)
        start = j
    if len(landmarks) < min_landmarks:
        landmarks = pad_landmarks(nb, landmarks, min_landmarks)
    return LandmarkSequence(tuple(landmarks), tolerance=T, pass_threshold_final=T)


def _split_point(nb, u, v, inner):
    raw = nb.raw_points
    try:
        d = chord_distances(raw[inner], raw[u], raw[v])
    except ZeroLengthChord:
        rel = raw[inner] - raw[u]
        d = np.sqrt(rel[:, 0] * rel[:, 0] + rel[:, 1] * rel[:, 1])
    k = int(np.argmax(d))
    if d[k] == 0:
        k = len(inner) // 2
    return float(d[k]), int(inner[k])


def pad_landmarks(nb, landmarks, min_landmarks):
    """Greedily re-split the worst segment at its farthest point until enough landmarks exist."""
    if min_landmarks > nb.n:
        raise TooFewPoints(f"cannot place {min_landmarks} landmarks on a boundary of {nb.n} points")
    assert len(landmarks) >= 2
    landmarks = sorted(landmarks)
    while len(landmarks) < min_landmarks:
        m = len(landmarks)
        best_key, split = None, None
        for k in range(m):
            u, v = landmarks[k], landmarks[(k + 1) % m]
            inner = interior_indices(nb.n, u, v)
            if len(inner) == 0:
                continue
            dev, index = _split_point(nb, u, v, inner)
            if best_key is None or (dev, len(inner)) > best_key:
                best_key, split = (dev, len(inner)), index
        assert split is not None, "boundary too short to pad landmarks"
        landmarks = sorted(landmarks + [split])
    return landmarks


# -- Deletion phases 1 and 2 --

def delete_weak_segments(nb, landmarks, threshold, min_landmarks=3):
    """Repeatedly merge the weakest segment with a neighbor while the merged
    chord deviates by at most ``threshold``.

    For the weakest segment (u, v) both single deletions are evaluated, u (merging
    with the previous segment) and v (merging with the next one); the one with the
    smaller merged deviation wins. If neither fits, the segment stays frozen until
    one of its neighboring landmarks changes.
    """
    order = list(landmarks.indices)
    m = len(order)
    nxt = {order[k]: order[(k + 1) % m] for k in range(m)}
    prv = {v: u for u, v in nxt.items()}
    cache = {}

    def dev(u, v):
        if (u, v) not in cache:
            cache[(u, v)] = segment_deviation(nb, u, v)
        return cache[(u, v)]

    heap = [(dev(u, nxt[u]), u, nxt[u]) for u in order]
    heapq.heapify(heap)
    count = m
    while heap and count > min_landmarks:
        _, u, v = heapq.heappop(heap)
        if nxt.get(u) != v:
            continue  # stale entry
        drop_u = dev(prv[u], v)
        drop_v = dev(u, nxt[v])
        victim, merged = (u, drop_u) if drop_u <= drop_v else (v, drop_v)
        if not merged <= threshold:
            continue  # frozen
        a, b = prv[victim], nxt[victim]
        nxt[a], prv[b] = b, a
        del nxt[victim], prv[victim]
        count -= 1
        for s in (prv[a], a, b):
            heapq.heappush(heap, (dev(s, nxt[s]), s, nxt[s]))

    kept = tuple(i for i in order if i in nxt)
    return LandmarkSequence(kept, tolerance=threshold, pass_threshold_final=landmarks.pass_threshold_final)


def delete_phase1(nb, landmarks, tau, min_landmarks=3):
    assert tau > 0
    return delete_weak_segments(nb, landmarks, tau, min_landmarks)


def delete_phase2(nb, landmarks, tau, sigma, lambda_, min_landmarks=3):
    return delete_weak_segments(nb, landmarks, tau + lambda_ * sigma, min_landmarks)


# -- Deletion phase 3 --

def vertex_cosine(q_l, q_m, q_n):
    """Cosine of the angle at q_m between the arms q_m->q_l and q_m->q_n."""
    ux, uy = q_l[0] - q_m[0], q_l[1] - q_m[1]
    vx, vy = q_n[0] - q_m[0], q_n[1] - q_m[1]
    nu = math.sqrt(ux * ux + uy * uy)
    nv = math.sqrt(vx * vx + vy * vy)
    if nu == 0 or nv == 0:
        raise ZeroLengthArm(f"vertex {tuple(q_m)} coincides with a neighbor")
    return min(1.0, max(-1.0, (ux * vx + uy * vy) / (nu * nv)))


def delete_phase3(nb, landmarks, kappa, min_landmarks=3):
    """Delete the straightest landmark vertex while its cosine does not exceed kappa."""
    raw = nb.raw_points
    order = list(landmarks.indices)
    m = len(order)
    nxt = {order[k]: order[(k + 1) % m] for k in range(m)}
    prv = {v: u for u, v in nxt.items()}

    def entry(v):
        p, q = prv[v], nxt[v]
        if np.array_equal(raw[p], raw[q]) or np.array_equal(raw[v], raw[p]) or np.array_equal(raw[v], raw[q]):
            return None  # zero-length arm, or deleting v would leave a zero-length chord
        return (vertex_cosine(raw[p], raw[v], raw[q]), v, p, q)

    heap = [e for e in map(entry, order) if e is not None]
    heapq.heapify(heap)
    count = m
    while heap and count > min_landmarks:
        cos, v, p, q = heapq.heappop(heap)
        if prv.get(v) != p or nxt.get(v) != q:
            continue
        if cos > kappa:
            break
        nxt[p], prv[q] = q, p
        del nxt[v], prv[v]
        count -= 1
        for w in (p, q):
            e = entry(w)
            if e is not None:
                heapq.heappush(heap, e)

    kept = tuple(i for i in order if i in nxt)
    return replace(landmarks, indices=kept)
