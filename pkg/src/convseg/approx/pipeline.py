"""
A brief explanation of the approximation steps:
1. iterative_approximation() runs sequential scan passes with the threshold
T = sigma, 2*sigma, 3*sigma, ... (sigma is the object scale, the reciprocal of
the raw perimeter). After each pass it compares the sum of squared errors with
T^2 * m / n (the square of the threshold times the reciprocal of the
compression ratio n/m). The first violation ends the iteration; its T becomes
the error tolerance tau.

2. delete_phase1() merges weakest segments while the merged deviation stays
within tau.

3. delete_phase2() repeats this with the relaxed bound tau + lambda * sigma.

4. delete_phase3() removes nearly straight landmark vertices whose cosine does
not exceed kappa.

Every stage keeps at least min_landmarks landmarks, and none of them adds one,
so the landmark count never increases from one stage to the next.
"""

__all__ = ["ApproxConfig", "ApproxStages", "iterative_approximation", "approximate_stages", "approximate"]

from dataclasses import dataclass, replace
from typing import NamedTuple

from convseg.messages import debug_message
from convseg.approx.segments import LandmarkSequence, sse
from convseg.approx.operations import (
    scan_pass,
    delete_phase1,
    delete_phase2,
    delete_phase3,
)

# the threshold never needs to exceed half the unit perimeter
MAX_THRESHOLD = 0.5


@dataclass(frozen=True)
class ApproxConfig:
    lambda_: int = 5
    kappa: float = -0.9
    max_passes: int = 1000
    min_landmarks: int = 3
    # return the landmarks of the pass that broke the error bound instead of the last one that kept it
    keep_violating_pass: bool = False

    def __post_init__(self):
        if self.max_passes < 1:
            raise ValueError(f"max_passes must be >= 1, got {self.max_passes}")
        if not -1 <= self.kappa <= 1:
            raise ValueError(f"kappa must lie in [-1, 1], got {self.kappa}")
        if self.lambda_ < 0:
            raise ValueError(f"lambda must be >= 0, got {self.lambda_}")
        if self.min_landmarks < 3:
            raise ValueError(f"min_landmarks must be >= 3, got {self.min_landmarks}")


class ApproxStages(NamedTuple):
    scan: LandmarkSequence
    phase1: LandmarkSequence
    phase2: LandmarkSequence
    phase3: LandmarkSequence


def iterative_approximation(nb, cfg):
    n = nb.n
    satisfied = None
    for k in range(1, cfg.max_passes + 1):
        T = k * nb.sigma
        if T > MAX_THRESHOLD and k > 1:
            break
        landmarks = scan_pass(nb, T, cfg.min_landmarks)
        error = sse(nb, landmarks)
        bound = T * T * len(landmarks) / n
        debug_message(f"scan pass {k}: T={T!r} landmarks={len(landmarks)} sse={error!r} bound={bound!r}")
        if error > bound:
            if cfg.keep_violating_pass:
                return landmarks
            if satisfied is None:
                return replace(landmarks, tolerance=nb.sigma)
            return replace(satisfied, tolerance=T, pass_threshold_final=T)
        satisfied = landmarks
    # halted by the pass cap or the threshold cap: keep the most recent pass
    return satisfied


def approximate_stages(nb, cfg):
    scanned = iterative_approximation(nb, cfg)
    tau = scanned.tolerance
    first = delete_phase1(nb, scanned, tau, cfg.min_landmarks)
    second = delete_phase2(nb, first, tau, nb.sigma, cfg.lambda_, cfg.min_landmarks)
    third = delete_phase3(nb, second, cfg.kappa, cfg.min_landmarks)
    debug_message(
        f"landmarks: scan={len(scanned)} phase1={len(first)} phase2={len(second)} phase3={len(third)} tau={tau!r}"
    )
    return ApproxStages(scanned, first, second, third)


def approximate(nb, cfg):
    """Sequential scan merging followed by the three deletion phases.

    The returned tolerance is the phase 2 threshold tau + lambda * sigma.
    """
    return approximate_stages(nb, cfg).phase3
