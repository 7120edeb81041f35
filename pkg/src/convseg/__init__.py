"""
convseg describes 2D shape silhouettes by their approximately convex parts and
classifies them by nearest neighbor.

The work is divided into five steps:

Step 1: Ingest

A raster silhouette is reduced to the outer contour of its largest 8-connected
component by Moore-neighbor tracing (point lists are read as they are). The
contour is oriented counterclockwise, moved to its center of mass, scaled to
unit perimeter and rotated so that it starts at its farthest point.

The module convseg.ingest is responsible for this stage.

Step 2: Approximate

Sequential scan passes with an escalating threshold pick landmark points until
the approximation error outgrows the compression; three deletion phases then
remove pseudo landmarks.

The package convseg.approx is responsible for this stage.

Step 3: Decompose

Concave landmarks split the landmark cycle into approximately convex segments
(convseg.convexdec).

Step 4: Describe

Every segment is described by its size, its number of extreme points, its area,
its base width and its height; the descriptions are sorted by size into a
feature profile (convseg.features).

Step 5: Compare

Profiles are compared rank by rank (convseg.similarity). convseg.classify runs
nearest-neighbor leave-one-out evaluation over whole datasets.

convseg.pipeline chains steps 1 to 4 for a single file. The printer_* modules
write the results.
"""

# Worker modules
from . import ingest
from . import approx
from . import convexdec
from . import features
from . import similarity
from . import classify
from . import pipeline
from . import synthetic
from . import printer_text
from . import printer_json
from . import printer_svg
from . import version

# Helper modules
from . import messages
from . import errors

from .approx import ApproxConfig
from .pipeline import analyze

__version__ = version.VERSION_NUMBER

# Entry points
from .__main__ import main
