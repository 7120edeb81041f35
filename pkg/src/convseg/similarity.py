"""
Pairwise comparison of feature profiles.

Segments correspond by their rank in the size-sorted profile; there is no
geometric matching. The shorter profile is padded with all-zero segments.

Note that despite its customary name the score is a dissimilarity: 0 means
identical profiles, and the nearest neighbor is the one with the lowest score.
"""

__all__ = ["SimilarityScore", "pad_profiles", "similarity", "DEFAULT_WEIGHTS"]

import math
from dataclasses import dataclass

from convseg.features import ZERO_SEGMENT

DEFAULT_WEIGHTS = (1.0, 1.0, 1.0, 1.0, 1.0)


@dataclass(frozen=True, order=True)
class SimilarityScore:
    value: float

    def __post_init__(self):
        assert self.value >= 0

    def __float__(self):
        return self.value


def pad_profiles(P_i, P_j):
    s = max(len(P_i), len(P_j))
    padded_i = P_i.segments + (ZERO_SEGMENT,) * (s - len(P_i))
    padded_j = P_j.segments + (ZERO_SEGMENT,) * (s - len(P_j))
    return padded_i, padded_j, s


def similarity(P_i, P_j, weights=None):
    """Sum over ranks k of the (weighted) squared differences of n, x, a, b, h."""
    weights = DEFAULT_WEIGHTS if weights is None else weights
    assert len(weights) == 5 and all(w >= 0 for w in weights)
    padded_i, padded_j, _ = pad_profiles(P_i, P_j)
    terms = []
    for f, g in zip(padded_i, padded_j):
        for w, u, v in zip(weights, f.as_tuple(), g.as_tuple()):
            terms.append(w * (u - v) ** 2)
    # exactly rounded: independent of term order and of zero padding
    return SimilarityScore(math.fsum(terms))
