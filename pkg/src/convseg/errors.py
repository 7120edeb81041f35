"""
Exception types raised by convseg.

Every error carries the process exit code the command-line front end maps it
to. I/O problems are left as the builtin OSError family (exit code 2).
"""

__all__ = [
    "ConvsegError",
    "IngestError", "EmptyMask", "DegenerateComponent", "ZeroArea", "ZeroPerimeter", "PointListSyntaxError",
    "GeometryError", "ZeroLengthChord", "ZeroLengthArm", "TooFewPoints",
    "DatasetError", "EmptyDataset", "EmptyPool", "TooFewShapes", "SingleClass",
]


class ConvsegError(Exception):
    exit_code = 1


# -- Pipeline errors (exit code 3) --

class IngestError(ConvsegError):
    exit_code = 3

class EmptyMask(IngestError):
    """The raster has no foreground pixel."""

class DegenerateComponent(IngestError):
    """The largest component traces to fewer than 3 distinct boundary points."""

class ZeroArea(IngestError):
    """All boundary points are collinear."""

class ZeroPerimeter(IngestError):
    pass

class PointListSyntaxError(IngestError):
    pass


class GeometryError(ConvsegError):
    exit_code = 3

class ZeroLengthChord(GeometryError):
    pass

class ZeroLengthArm(GeometryError):
    pass

class TooFewPoints(GeometryError):
    pass


# -- Dataset errors (exit code 4) --

class DatasetError(ConvsegError):
    exit_code = 4

class EmptyDataset(DatasetError):
    pass

class EmptyPool(DatasetError):
    pass

class TooFewShapes(DatasetError):
    pass

class SingleClass(DatasetError):
    pass
