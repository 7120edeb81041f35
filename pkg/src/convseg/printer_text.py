"""
Plain-text output formats: point lists, landmark files, decomposition dumps,
feature and matrix CSV, and the evaluation summary table.

Reals are written with repr() so that a point list read back is bit-identical.
"""

__all__ = [
    "format_points", "format_landmarks", "format_decomposition", "format_features",
    "format_matrix", "format_summary", "write_text", "FEATURE_HEADER",
]

import sys

FEATURE_HEADER = "segment,n,x,a,b,h"


def _real(v):
    return repr(float(v))


def format_points(points):
    return "".join(f"{_real(x)},{_real(y)}\n" for x, y in points)


def format_landmarks(nb, landmarks):
    lines = [f"# tolerance={_real(landmarks.tolerance)}\n"]
    for i in landmarks.indices:
        x, y = nb.points[i]
        lines.append(f"{i},{_real(x)},{_real(y)}\n")
    return "".join(lines)


def format_decomposition(nb, decomposition):
    return "".join(
        f"seg={k} lm_start={s.start_lm} lm_end={s.end_lm} size={s.size(nb.n)}\n"
        for k, s in enumerate(decomposition.segments)
    )


def format_features(profile):
    lines = [FEATURE_HEADER + "\n"]
    for k, f in enumerate(profile.segments):
        lines.append(f"{k},{f.n},{f.x},{_real(f.a)},{_real(f.b)},{_real(f.h)}\n")
    return "".join(lines)


def format_matrix(shape_ids, matrix):
    assert matrix.shape == (len(shape_ids), len(shape_ids))
    lines = [",".join(["shape_id", *shape_ids]) + "\n"]
    for sid, row in zip(shape_ids, matrix):
        lines.append(",".join([sid, *(f"{v:.9g}" for v in row)]) + "\n")
    return "".join(lines)


def format_summary(report):
    classes = report.confusion.classes
    width = max(len("class"), *map(len, classes))
    lines = [
        f"{'class':<{width}}  {'total':>6}  {'correct':>7}  {'accuracy':>8}\n",
    ]
    for t, label in enumerate(classes):
        row = report.confusion.counts[t]
        total, correct = sum(row), row[t]
        lines.append(f"{label:<{width}}  {total:>6}  {correct:>7}  {100.0 * correct / total:>7.2f}%\n")
    lines.append(f"\nAccuracy: {report.accuracy:.2f}% ({report.confusion.trace()}/{report.confusion.total()})\n")
    lines.append(f"Wall time: {report.wall_time:.3f} s\n")
    return "".join(lines)


def write_text(text, outpath=None):
    """Write to ``outpath``, or to standard output if it is None."""
    if outpath is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with outpath.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
