"""Point, box, displacement and Gaussian-target arithmetic.

Shared by target encoding, decoding and evaluation.  Everything here is a
pure function; boxes are kept center-size and converted to corners only
inside IoU.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EncodeError


@dataclass(frozen=True)
class GridSpec:
    """Output grid: height x width cells, `stride` image pixels per cell."""

    height: int
    width: int
    stride: int

    def __post_init__(self):
        if self.height < 1 or self.width < 1 or self.stride < 1:
            raise ValueError(f"grid dimensions must be >= 1, got {self}")


@dataclass(frozen=True)
class Point:
    """A location in grid-cell coordinates (real-valued)."""

    x: float
    y: float


@dataclass(frozen=True)
class Displacement:
    """A vector between two grid points, in cells."""

    dx: float
    dy: float


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box in image pixels, center-size parameterization."""

    cx: float
    cy: float
    w: float
    h: float

    def __post_init__(self):
        if not (self.w > 0 and self.h > 0):
            raise ValueError(f"box size must be positive, got w={self.w} h={self.h}")


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)


def displacements(anchor: Point, human: Point, obj: Point) -> tuple[Displacement, Displacement]:
    """Vectors from the interaction anchor to its human and object points.

    Round-trips exactly: anchor + to_human == human, anchor + to_object == obj.
    """
    to_human = Displacement(human.x - anchor.x, human.y - anchor.y)
    to_object = Displacement(obj.x - anchor.x, obj.y - anchor.y)
    return to_human, to_object


def gaussian_splat(plane: np.ndarray, center: Point, radius: float) -> np.ndarray:
    """Max-merge a Gaussian bump into `plane` (H x W), modified in place.

    sigma = radius / 3, so the value at the center cell is 1.0 for integer
    centers and the tail is < 1e-7 beyond 6 sigma.  Merging by max keeps
    peak values <= 1 when splats overlap.
    """
    height, width = plane.shape
    cx, cy = round(center.x), round(center.y)
    if not (0 <= cx < width and 0 <= cy < height):
        raise EncodeError(f"splat center {center} outside {height}x{width} grid")
    sigma = radius / 3.0
    ys = np.arange(height, dtype=np.float64)[:, None]
    xs = np.arange(width, dtype=np.float64)[None, :]
    d2 = (xs - center.x) ** 2 + (ys - center.y) ** 2
    np.maximum(plane, np.exp(-d2 / (2.0 * sigma * sigma)), out=plane)
    return plane


def gaussian_radius(box: BBox, grid: GridSpec) -> int:
    """Splat radius in cells, governed by the smaller box side."""
    return max(1, math.floor(min(box.w, box.h) / (3.0 * grid.stride)))


def _corners(b: BBox) -> tuple[float, float, float, float]:
    return (b.cx - b.w / 2.0, b.cy - b.h / 2.0, b.cx + b.w / 2.0, b.cy + b.h / 2.0)


def iou(a: BBox, b: BBox) -> float:
    ax1, ay1, ax2, ay2 = _corners(a)
    bx1, by1, bx2, by2 = _corners(b)
    iw = min(ax2, bx2) - max(ax1, bx1)
    ih = min(ay2, by2) - max(ay1, by1)
    if iw <= 0.0 or ih <= 0.0:
        return 0.0
    inter = iw * ih
    union = a.w * a.h + b.w * b.h - inter
    return inter / union
