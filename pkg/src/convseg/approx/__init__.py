"""
Polygonal approximation of a normalized closed boundary: sequential scan
merging with an escalating threshold, followed by deletion of pseudo landmark
points. See convseg.approx.pipeline for the order of steps.
"""

from .segments import (
    Chord,
    DeviationResult,
    LandmarkSequence,
    point_chord_distance,
    max_deviation,
    sse,
)
from .operations import (
    scan_pass,
    delete_phase1,
    delete_phase2,
    delete_phase3,
    vertex_cosine,
)
from .pipeline import (
    ApproxConfig,
    ApproxStages,
    iterative_approximation,
    approximate_stages,
    approximate,
)
