"""Axis-parallel rectangle primitives, random instances, and domination filtering.

Coordinates are double-precision floats. Intersection semantics are open
throughout: two rectangles intersect only when their open interiors share a
point, so boxes that merely touch along an edge or corner do not intersect.
Containment, by contrast, uses the closed boxes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateRectangleError",
    "Point",
    "Rectangle",
    "Region",
    "Instance",
    "UNIT_SQUARE",
    "make_rectangle",
    "generate_instance",
    "interiors_intersect",
    "contains",
    "filter_dominated",
    "common_intersection",
]


class DegenerateRectangleError(ValueError):
    """Corner points sharing an x or y coordinate span no proper rectangle."""


@dataclass(frozen=True)
class Point:
    """A point in the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x!r}, {self.y!r})")


@dataclass(frozen=True)
class Rectangle:
    """Closed axis-parallel box with strictly positive width and height.

    ``lo`` is the bottom-left corner, ``hi`` the top-right corner.
    """

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        if not (self.lo.x < self.hi.x and self.lo.y < self.hi.y):
            raise DegenerateRectangleError(
                f"need lo < hi componentwise, got lo={self.lo}, hi={self.hi}"
            )

    @property
    def width(self) -> float:
        return self.hi.x - self.lo.x

    @property
    def height(self) -> float:
        return self.hi.y - self.lo.y

    def center(self) -> Point:
        return Point((self.lo.x + self.hi.x) / 2.0, (self.lo.y + self.hi.y) / 2.0)

    def contains_point_open(self, p: Point) -> bool:
        """True if ``p`` lies strictly inside this box (boundary excluded)."""
        return self.lo.x < p.x < self.hi.x and self.lo.y < p.y < self.hi.y


@dataclass(frozen=True)
class Region:
    """Rectangular sampling region for instance generation."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self) -> None:
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError(f"empty region: {self}")

    def contains_rect(self, r: Rectangle) -> bool:
        """Closed containment of ``r`` in this region."""
        return (
            self.x_min <= r.lo.x
            and r.hi.x <= self.x_max
            and self.y_min <= r.lo.y
            and r.hi.y <= self.y_max
        )


UNIT_SQUARE = Region(0.0, 1.0, 0.0, 1.0)


@dataclass(frozen=True)
class Instance:
    """An ordered collection of rectangles plus its generation metadata.

    The tuple order is the canonical index space used by every result.
    ``seed`` is None for instances parsed from files, which carry no seed.
    """

    rects: tuple[Rectangle, ...]
    seed: int | None
    region: Region
    n_requested: int

    def __post_init__(self) -> None:
        for i, r in enumerate(self.rects):
            if not self.region.contains_rect(r):
                raise ValueError(f"rectangle {i} lies outside the region: {r}")

    @property
    def n(self) -> int:
        return len(self.rects)


def make_rectangle(p: Point, q: Point) -> Rectangle:
    """Build the rectangle spanned by two opposite corner points.

    The corners may be given in any order; the result has ``lo`` equal to the
    componentwise minimum and ``hi`` to the componentwise maximum.

    Raises:
        DegenerateRectangleError: if the points share an x or a y coordinate.
    """
    if p.x == q.x or p.y == q.y:
        raise DegenerateRectangleError(f"degenerate corner pair: {p}, {q}")
    return Rectangle(
        Point(min(p.x, q.x), min(p.y, q.y)),
        Point(max(p.x, q.x), max(p.y, q.y)),
    )


def generate_instance(n: int, region: Region = UNIT_SQUARE, seed: int = 0) -> Instance:
    """Generate ``n`` random rectangles, each spanned by two uniform points.

    Both corner points are drawn coordinate-wise uniformly in ``region``; a
    draw with a shared x or y coordinate is discarded and redrawn so the
    result always has ``n`` proper rectangles. The generator is Python's
    Mersenne Twister seeded with ``seed``, so the same ``(n, region, seed)``
    reproduces the identical instance on the same build.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    rects = []
    for _ in range(n):
        while True:
            px = rng.uniform(region.x_min, region.x_max)
            py = rng.uniform(region.y_min, region.y_max)
            qx = rng.uniform(region.x_min, region.x_max)
            qy = rng.uniform(region.y_min, region.y_max)
            if px != qx and py != qy:
                break
        rects.append(make_rectangle(Point(px, py), Point(qx, qy)))
    return Instance(tuple(rects), seed, region, n)


def interiors_intersect(a: Rectangle, b: Rectangle) -> bool:
    """True if the open interiors of ``a`` and ``b`` share a point."""
    return (
        a.lo.x < b.hi.x
        and b.lo.x < a.hi.x
        and a.lo.y < b.hi.y
        and b.lo.y < a.hi.y
    )


def contains(outer: Rectangle, inner: Rectangle) -> bool:
    """True if ``inner``'s closed box lies inside ``outer``'s and they differ.

    Exact duplicates contain neither each other, so duplicated boxes are
    never treated as dominating.
    """
    return (
        outer.lo.x <= inner.lo.x
        and inner.hi.x <= outer.hi.x
        and outer.lo.y <= inner.lo.y
        and inner.hi.y <= outer.hi.y
        and inner != outer
    )


def _bounds_arrays(rects):
    n = len(rects)
    lx = np.fromiter((r.lo.x for r in rects), dtype=float, count=n)
    ly = np.fromiter((r.lo.y for r in rects), dtype=float, count=n)
    hx = np.fromiter((r.hi.x for r in rects), dtype=float, count=n)
    hy = np.fromiter((r.hi.y for r in rects), dtype=float, count=n)
    return lx, ly, hx, hy


def filter_dominated(instance) -> tuple[list[int], list[int]]:
    """Split rectangle indices into kept (non-dominated) and removed.

    A rectangle is dominated when it contains some other rectangle of the
    set. All rectangles are judged against the original set at once, so in a
    nesting chain everything except the innermost rectangle is removed.
    ``kept`` preserves the original order.

    Accepts an Instance or any sequence of Rectangle.
    """
    rects = instance.rects if isinstance(instance, Instance) else tuple(instance)
    n = len(rects)
    if n <= 1:
        return list(range(n)), []

    lx, ly, hx, hy = _bounds_arrays(rects)
    dominated = np.zeros(n, dtype=bool)
    block = 1024
    for start in range(0, n, block):
        stop = min(n, start + block)
        inside = (
            (lx[None, :] >= lx[start:stop, None])
            & (hx[None, :] <= hx[start:stop, None])
            & (ly[None, :] >= ly[start:stop, None])
            & (hy[None, :] <= hy[start:stop, None])
        )
        identical = (
            (lx[None, :] == lx[start:stop, None])
            & (hx[None, :] == hx[start:stop, None])
            & (ly[None, :] == ly[start:stop, None])
            & (hy[None, :] == hy[start:stop, None])
        )
        dominated[start:stop] = (inside & ~identical).any(axis=1)

    kept = [int(i) for i in np.flatnonzero(~dominated)]
    removed = [int(i) for i in np.flatnonzero(dominated)]
    return kept, removed


def common_intersection(rects) -> Rectangle | None:
    """Intersection box of all rectangles, or None if it has no interior."""
    rects = list(rects)
    if not rects:
        raise ValueError("common_intersection of an empty collection")
    lo_x = max(r.lo.x for r in rects)
    hi_x = min(r.hi.x for r in rects)
    lo_y = max(r.lo.y for r in rects)
    hi_y = min(r.hi.y for r in rects)
    if lo_x < hi_x and lo_y < hi_y:
        return Rectangle(Point(lo_x, lo_y), Point(hi_x, hi_y))
    return None
