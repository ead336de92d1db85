# Copyright 2024 The ortholay authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Geometry"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence, Union

from .enums import Axis, Orientation, Side
from .errors import InvalidArgument
from .utils import EPS

__all__ = (
    "Point",
    "Interval",
    "Rect",
    "Box",
    "OrthoSegment",
    "segment_intersection",
    "box_from_label",
    "side_capacity",
    "simplify_polyline",
    "polyline_length",
)


class Point(NamedTuple):
    """A point in drawing coordinates (y grows upwards)."""

    x: float
    y: float

    def coordinate(self, axis: Axis) -> float:
        return self[axis.index]


class Interval(NamedTuple):
    """A closed interval ``[lo, hi]``."""

    lo: float
    hi: float

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def middle(self) -> float:
        return (self.lo + self.hi) / 2

    def contains(self, value: float, tolerance: float = EPS) -> bool:
        return self.lo - tolerance <= value <= self.hi + tolerance

    def contains_interval(self, other: Interval, tolerance: float = EPS) -> bool:
        return self.lo - tolerance <= other.lo and other.hi <= self.hi + tolerance

    def overlaps(self, other: Interval, tolerance: float = EPS) -> bool:
        """Whether the closed intervals share at least one point."""
        return self.lo <= other.hi + tolerance and other.lo <= self.hi + tolerance

    def intersection(self, other: Interval) -> Optional[Interval]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi + EPS:
            return None
        return Interval(lo, max(lo, hi))

    def padded(self, amount: float) -> Interval:
        return Interval(self.lo - amount, self.hi + amount)


class Rect(NamedTuple):
    """An axis-aligned rectangle given by its corners."""

    x0: float
    y0: float
    x1: float
    y1: float

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height

    def span(self, axis: Axis) -> Interval:
        if axis is Axis.X:
            return Interval(self.x0, self.x1)
        return Interval(self.y0, self.y1)

    def contains_rect(self, other: Rect, tolerance: float = EPS) -> bool:
        return (
            self.x0 - tolerance <= other.x0
            and other.x1 <= self.x1 + tolerance
            and self.y0 - tolerance <= other.y0
            and other.y1 <= self.y1 + tolerance
        )

    def intersects_interior(self, other: Rect, tolerance: float = EPS) -> bool:
        """Whether the rectangles overlap with positive area."""
        return (
            min(self.x1, other.x1) - max(self.x0, other.x0) > tolerance
            and min(self.y1, other.y1) - max(self.y0, other.y0) > tolerance
        )

    def inflated(self, amount: float) -> Rect:
        return Rect(
            self.x0 - amount, self.y0 - amount, self.x1 + amount, self.y1 + amount
        )

    def transposed(self) -> Rect:
        return Rect(self.y0, self.x0, self.y1, self.x1)

    @classmethod
    def bounding(cls, points: list[Point]) -> Rect:
        if not points:
            raise InvalidArgument("Can't compute the bounding box of no points.")
        xs = [point.x for point in points]
        ys = [point.y for point in points]
        return cls(min(xs), min(ys), max(xs), max(ys))


class Box(NamedTuple):
    """
    A vertex box.

    The box may grow during nudging but never shrinks below
    its original size.
    """

    cx: float
    cy: float
    width: float
    height: float
    original_width: float
    original_height: float

    @classmethod
    def from_sides(
        cls,
        left: float,
        right: float,
        bottom: float,
        top: float,
        *,
        original_width: Optional[float] = None,
        original_height: Optional[float] = None,
    ) -> Box:
        width = right - left
        height = top - bottom
        return cls(
            (left + right) / 2,
            (bottom + top) / 2,
            width,
            height,
            width if original_width is None else original_width,
            height if original_height is None else original_height,
        )

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    @property
    def left(self) -> float:
        return self.cx - self.width / 2

    @property
    def right(self) -> float:
        return self.cx + self.width / 2

    @property
    def bottom(self) -> float:
        return self.cy - self.height / 2

    @property
    def top(self) -> float:
        return self.cy + self.height / 2

    @property
    def rect(self) -> Rect:
        return Rect(self.left, self.bottom, self.right, self.top)

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)

    def span(self, axis: Axis) -> Interval:
        """The extent of the box along ``axis``."""
        if axis is Axis.X:
            return Interval(self.left, self.right)
        return Interval(self.bottom, self.top)

    def side_coordinate(self, side: Side) -> float:
        return {
            Side.NORTH: self.top,
            Side.EAST: self.right,
            Side.SOUTH: self.bottom,
            Side.WEST: self.left,
        }[side]

    def side_length(self, side: Side) -> float:
        if side.orientation is Orientation.HORIZONTAL:
            return self.width
        return self.height

    def moved_to(self, cx: float, cy: float) -> Box:
        return self._replace(cx=cx, cy=cy)

    def gap(self, other: Box) -> tuple[float, float]:
        """The horizontal and vertical gaps to ``other`` (negative when overlapping)."""
        gap_x = abs(self.cx - other.cx) - (self.width + other.width) / 2
        gap_y = abs(self.cy - other.cy) - (self.height + other.height) / 2
        return gap_x, gap_y

    def overlaps(self, other: Box, margin: float = 0.0) -> bool:
        """Whether the boxes are closer than ``margin`` along both axes."""
        gap_x, gap_y = self.gap(other)
        return gap_x < margin - EPS and gap_y < margin - EPS

    def touches_or_overlaps(self, other: Box) -> bool:
        gap_x, gap_y = self.gap(other)
        return gap_x <= EPS and gap_y <= EPS

    def contains_point(self, point: Point, tolerance: float = EPS) -> bool:
        return (
            self.left - tolerance <= point.x <= self.right + tolerance
            and self.bottom - tolerance <= point.y <= self.top + tolerance
        )

    def strictly_contains(self, point: Point, tolerance: float = EPS) -> bool:
        return (
            self.left + tolerance < point.x < self.right - tolerance
            and self.bottom + tolerance < point.y < self.top - tolerance
        )

    def side_of(self, point: Point, tolerance: float = 1e-6) -> Optional[Side]:
        """The side the point lies on, or ``None`` if it is not on the boundary."""
        if not self.contains_point(point, tolerance):
            return None
        for side, distance in (
            (Side.NORTH, abs(point.y - self.top)),
            (Side.EAST, abs(point.x - self.right)),
            (Side.SOUTH, abs(point.y - self.bottom)),
            (Side.WEST, abs(point.x - self.left)),
        ):
            if distance <= tolerance:
                return side
        return None


class OrthoSegment(NamedTuple):
    """
    An axis-aligned segment.

    The fixed coordinate of a horizontal segment is its y, and of a vertical
    one its x. ``owner`` identifies what the segment belongs to: an edge id,
    a box side or a dummy bar.
    """

    orientation: Orientation
    fixed: float
    lo: float
    hi: float
    owner: Optional[str] = None

    @classmethod
    def from_points(cls, a: Point, b: Point, owner: Optional[str] = None) -> OrthoSegment:
        """
        Creates a segment between two points.

        Raises:
            InvalidArgument: The points don't share a coordinate.
        """
        if abs(a.y - b.y) <= EPS:
            lo, hi = sorted((a.x, b.x))
            return cls(Orientation.HORIZONTAL, a.y, lo, hi, owner)
        if abs(a.x - b.x) <= EPS:
            lo, hi = sorted((a.y, b.y))
            return cls(Orientation.VERTICAL, a.x, lo, hi, owner)
        raise InvalidArgument(f"Segment {a} -> {b} is not axis-aligned.")

    @property
    def span(self) -> Interval:
        return Interval(self.lo, self.hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def start(self) -> Point:
        if self.orientation is Orientation.HORIZONTAL:
            return Point(self.lo, self.fixed)
        return Point(self.fixed, self.lo)

    @property
    def end(self) -> Point:
        if self.orientation is Orientation.HORIZONTAL:
            return Point(self.hi, self.fixed)
        return Point(self.fixed, self.hi)


def segment_intersection(
    a: OrthoSegment, b: OrthoSegment
) -> Union[None, Point, Interval]:
    """
    Intersects two axis-aligned segments.

    Returns:
        ``None`` when the segments are disjoint, the crossing `Point` for a
        perpendicular pair and the shared `Interval` (along the common line)
        for an overlapping parallel pair.

    Examples:
        >>> v = OrthoSegment(Orientation.VERTICAL, 2, 0, 4)
        >>> h = OrthoSegment(Orientation.HORIZONTAL, 1, 0, 5)
        >>> segment_intersection(v, h)
        Point(x=2, y=1)
    """
    if a.orientation is b.orientation:
        if abs(a.fixed - b.fixed) > EPS:
            return None
        return a.span.intersection(b.span)

    if not (b.span.contains(a.fixed) and a.span.contains(b.fixed)):
        return None
    if a.orientation is Orientation.VERTICAL:
        return Point(a.fixed, b.fixed)
    return Point(b.fixed, a.fixed)


def side_capacity(length: float, min_port_gap: float) -> int:
    """
    The number of ports that fit evenly spaced on a side of the given length.

    The k-th of p ports sits at fraction k/(p+1) of the side, so p ports fit
    when ``length / (p + 1) >= min_port_gap``.
    """
    if min_port_gap <= 0:
        raise InvalidArgument("min_port_gap has to be positive.")
    return max(0, math.floor(length / min_port_gap - 1 + EPS))


def box_from_label(
    label: Optional[str],
    *,
    base_width: float = 12,
    base_height: float = 38,
    per_char_width: float = 8,
    min_port_gap: float = 18,
    degree: int = 0,
    center: Point = Point(0.0, 0.0),
) -> Box:
    """
    Computes a box that fits the label and all incident ports.

    The box only grows horizontally and stays centred on ``center``.

    Parameters:
        label: The vertex label. ``None`` is treated like an empty label.
        base_width: The default box width.
        base_height: The default (and final) box height.
        per_char_width: The horizontal advance of one label character.
        min_port_gap: The minimum distance between ports on one side.
        degree: The number of ports the box has to accommodate.
        center: The centre of the box.

    Raises:
        InvalidArgument: When the base dimensions aren't positive
            or the degree is negative.
    """
    if base_width <= 0 or base_height <= 0:
        raise InvalidArgument("Base box dimensions have to be positive.")
    if degree < 0:
        raise InvalidArgument("Degree can't be negative.")

    width = max(float(base_width), len(label or "") * per_char_width)
    height = float(base_height)

    missing = degree - 2 * side_capacity(height, min_port_gap)
    if missing > 0:
        per_horizontal_side = math.ceil(missing / 2)
        width = max(width, (per_horizontal_side + 1) * min_port_gap)

    return Box(center.x, center.y, width, height, width, height)


def simplify_polyline(points: Sequence[Point], tolerance: float = EPS) -> list[Point]:
    """
    Removes repeated points and the middle points of collinear runs.

    Examples:
        >>> simplify_polyline([Point(0, 0), Point(4, 0), Point(9, 0), Point(9, 3)])
        [Point(x=0, y=0), Point(x=9, y=0), Point(x=9, y=3)]
    """
    result: list[Point] = []
    for point in points:
        if result and abs(point.x - result[-1].x) <= tolerance and abs(
            point.y - result[-1].y
        ) <= tolerance:
            continue
        if len(result) >= 2:
            before, middle = result[-2], result[-1]
            same_x = abs(before.x - middle.x) <= tolerance and abs(middle.x - point.x) <= tolerance
            same_y = abs(before.y - middle.y) <= tolerance and abs(middle.y - point.y) <= tolerance
            if same_x or same_y:
                result[-1] = point
                continue
        result.append(point)
    return result


def polyline_length(points: Sequence[Point]) -> float:
    return sum(
        abs(end.x - start.x) + abs(end.y - start.y) for start, end in zip(points, points[1:])
    )
