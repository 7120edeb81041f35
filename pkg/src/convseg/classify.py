"""
Dataset loading, nearest-neighbor classification and leave-one-out
cross-validation.

Class labels follow the MPEG-7 / Kimia naming convention: the file stem up to
its last hyphen ("apple-1" -> "apple").
"""

__all__ = [
    "LabeledShape", "ShapeResult", "ConfusionMatrix", "EvalReport",
    "class_label", "load_dataset", "nearest_neighbor", "similarity_matrix", "loocv",
    "worker_count", "SUPPORTED_SUFFIXES",
]

import os
import time
import functools
from pathlib import Path
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from convseg.messages import status_message, warning_message
from convseg.errors import ConvsegError, EmptyDataset, EmptyPool, TooFewShapes, SingleClass
from convseg.ingest import IMAGE_SUFFIXES, POINT_SUFFIXES
from convseg.approx import ApproxConfig
from convseg.features import FeatureProfile
from convseg.similarity import similarity
from convseg import pipeline

SUPPORTED_SUFFIXES = IMAGE_SUFFIXES | POINT_SUFFIXES
THREADS_ENV = "CONVSEG_THREADS"


@dataclass(frozen=True)
class LabeledShape:
    shape_id: str
    class_label: str
    profile: FeatureProfile
    source_path: Path = None

    def __post_init__(self):
        assert self.class_label, f"empty class label for {self.shape_id!r}"


@dataclass(frozen=True)
class ShapeResult:
    shape_id: str
    true: str
    predicted: str
    nearest_id: str
    score: float


@dataclass(frozen=True)
class ConfusionMatrix:
    """``counts[t][p]`` counts shapes of class ``classes[t]`` predicted as ``classes[p]``."""

    classes: tuple
    counts: tuple

    def total(self):
        return sum(map(sum, self.counts))

    def trace(self):
        return sum(self.counts[k][k] for k in range(len(self.classes)))


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    confusion: ConfusionMatrix
    per_shape: tuple
    wall_time: float


def worker_count(workers=None):
    if workers is None:
        env = os.environ.get(THREADS_ENV, "").strip()
        if not env:
            return os.cpu_count() or 1
        try:
            workers = int(env)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def class_label(stem):
    label, sep, _ = stem.rpartition("-")
    if not sep or not label:
        warning_message(f"{stem!r} has no '<class>-<k>' name; using the whole stem as its class", cls="dataset")
        return stem
    return label


# -- Loading --

def _load_one(path, cfg, invert):
    try:
        analysis = pipeline.analyze(path, cfg, invert)
    except (ConvsegError, OSError) as exc:
        return path, exc
    return path, analysis.profile


def load_dataset(directory, cfg=ApproxConfig(), invert=False, workers=None, failures=None):
    """Run the full pipeline over every supported file in ``directory``.

    Files that fail are reported, appended to ``failures`` as ``(path, error)``
    and skipped. The result is sorted by shape id.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"{directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in SUPPORTED_SUFFIXES)
    if not files:
        raise EmptyDataset(f"no supported files in {directory}")
    status_message(f"Processing {len(files)} files from {directory}.")

    worker = functools.partial(_load_one, cfg=cfg, invert=invert)
    shapes = {}
    for path, result in _parallel_map(worker, files, worker_count(workers)):
        if not isinstance(result, FeatureProfile):
            warning_message(f"Skipping {path.name}: {type(result).__name__}: {result}", cls="dataset")
            if failures is not None:
                failures.append((path, result))
            continue
        if path.stem in shapes:
            warning_message(f"Skipping {path.name}: shape id {path.stem!r} already taken", cls="dataset")
            continue
        shapes[path.stem] = LabeledShape(path.stem, class_label(path.stem), result, path)

    if not shapes:
        raise EmptyDataset(f"no file in {directory} made it through the pipeline")
    return [shapes[k] for k in sorted(shapes)]


def _parallel_map(func, items, workers):
    if workers == 1 or len(items) <= 1:
        return [func(i) for i in items]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=max(1, len(items) // (4 * workers))))


# -- Classification --

def nearest_neighbor(query, pool, weights=None):
    """Pool member with the lowest score against ``query``; ties go to the lowest shape id."""
    if not pool:
        raise EmptyPool(f"no candidates to compare {query.shape_id!r} against")
    scored = [(similarity(query.profile, other.profile, weights), other) for other in pool]
    score, neighbor = min(scored, key=lambda e: (e[0].value, e[1].shape_id))
    return neighbor, score


_matrix_state = {}

def _init_matrix_worker(profiles, weights):
    _matrix_state["profiles"] = profiles
    _matrix_state["weights"] = weights

def _matrix_row(i):
    profiles, weights = _matrix_state["profiles"], _matrix_state["weights"]
    return [similarity(profiles[i], profiles[j], weights).value for j in range(i + 1, len(profiles))]


def similarity_matrix(dataset, weights=None, workers=None):
    """Symmetric matrix of pairwise scores with a zero diagonal, in dataset order.

    Rows of the upper triangle are computed independently, so any distribution
    over workers yields the same matrix.
    """
    profiles = [s.profile for s in dataset]
    count = len(profiles)
    workers = worker_count(workers)
    rows = list(range(count))
    if workers == 1 or count <= 2:
        _init_matrix_worker(profiles, weights)
        upper = [_matrix_row(i) for i in rows]
    else:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_matrix_worker, initargs=(profiles, weights)
        ) as executor:
            upper = list(executor.map(_matrix_row, rows, chunksize=max(1, count // (4 * workers))))
    matrix = np.zeros((count, count), dtype=np.float64)
    for i, row in enumerate(upper):
        matrix[i, i + 1:] = row
        matrix[i + 1:, i] = row
    return matrix


def loocv(dataset, weights=None, workers=None, matrix=None):
    """Leave-one-out 1-NN evaluation.

    ``matrix`` may carry a precomputed similarity_matrix() in shape id order.
    """
    t0 = time.perf_counter()
    shapes = sorted(dataset, key=lambda s: s.shape_id)
    if len(shapes) < 2:
        raise TooFewShapes(f"leave-one-out needs at least 2 shapes, got {len(shapes)}")
    classes = tuple(sorted({s.class_label for s in shapes}))
    if len(classes) < 2:
        raise SingleClass(f"all shapes belong to class {classes[0]!r}")
    if matrix is None:
        matrix = similarity_matrix(shapes, weights, workers)
    assert matrix.shape == (len(shapes), len(shapes))

    position = {c: k for k, c in enumerate(classes)}
    counts = [[0] * len(classes) for _ in classes]
    per_shape = []
    for i, query in enumerate(shapes):
        # shapes are in id order, so the first minimum is the lowest id
        j = min((j for j in range(len(shapes)) if j != i), key=lambda j: matrix[i, j])
        neighbor = shapes[j]
        counts[position[query.class_label]][position[neighbor.class_label]] += 1
        per_shape.append(ShapeResult(query.shape_id, query.class_label, neighbor.class_label, neighbor.shape_id, float(matrix[i, j])))

    confusion = ConfusionMatrix(classes, tuple(tuple(row) for row in counts))
    accuracy = 100.0 * confusion.trace() / confusion.total()
    return EvalReport(accuracy, confusion, tuple(per_shape), time.perf_counter() - t0)
