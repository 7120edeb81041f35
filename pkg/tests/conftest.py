import os
import sys
import atexit
import shlex
import shutil
from pathlib import Path

import numpy as np

import convseg.__main__
from convseg.ingest import NormalizedBoundary
from convseg.synthetic import write_mask


TEST_DIR = Path(__file__).resolve().parent
TMP_DIR = TEST_DIR/"tmp"

CLEANUP_OK = bool(int(os.environ.get("CLEANUP_OK", "1")))


def _remove_tmpdir():
    if TMP_DIR.exists(): shutil.rmtree(TMP_DIR)

def _init_tmpdir():
    _remove_tmpdir()
    TMP_DIR.mkdir()

_init_tmpdir()
if CLEANUP_OK: atexit.register(_remove_tmpdir)


def convseg_main(args, echo=True):
    args = [str(a) for a in args]
    if echo:
        str_args = " ".join([shlex.quote(a) for a in ["convseg", *args]])
        print(str_args, file=sys.stderr)
    return convseg.__main__.main(args)


COUNTER = 0

def tmp_path(suffix, stem="fixture"):
    # unique names, so CLEANUP_OK=0 keeps every fixture for inspection
    global COUNTER; COUNTER += 1
    return TMP_DIR/f"{stem}_{COUNTER:03d}{suffix}"


def write_points(points, path=None):
    path = path or tmp_path(".txt")
    path.write_text("".join(f"{x!r},{y!r}\n" for x, y in points), encoding="utf-8")
    return path


def write_pgm(mask, path=None):
    path = path or tmp_path(".pgm")
    write_mask(mask, path)
    return path


def block_mask(width, height, x0=1, y0=1, canvas=None):
    """Axis-aligned filled rectangle with its top left pixel at (x0, y0)."""
    cw, ch = canvas or (x0 + width + 1, y0 + height + 1)
    bits = np.zeros((ch, cw), dtype=bool)
    bits[y0:y0+height, x0:x0+width] = True
    return bits


def unit_nb(points):
    """Boundary in its own units (sigma 1), so deviations equal raw distances."""
    pts = np.asarray(points, dtype=np.float64)
    return NormalizedBoundary(points=pts, raw_points=pts, centroid_original=(0.0, 0.0), sigma=1.0)
