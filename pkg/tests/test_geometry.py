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

import math

import pytest

from ortholay.enums import Axis, Orientation, Side
from ortholay.errors import InvalidArgument
from ortholay.models import (
    Box,
    Interval,
    OrthoSegment,
    Point,
    Rect,
    box_from_label,
    polyline_length,
    segment_intersection,
    side_capacity,
    simplify_polyline,
)

from .conftest import make_box


def test_interval_overlap_is_closed() -> None:
    assert Interval(0, 1).overlaps(Interval(1, 2))
    assert not Interval(0, 1).overlaps(Interval(1.5, 2))
    assert Interval(0, 4).intersection(Interval(2, 6)) == Interval(2, 4)
    assert Interval(0, 1).intersection(Interval(2, 3)) is None


def test_rect_bounding_and_transposed() -> None:
    rect = Rect.bounding([Point(1, 5), Point(-2, 3), Point(4, -1)])
    assert rect == Rect(-2, -1, 4, 5)
    assert rect.area == 36
    assert rect.transposed() == Rect(-1, -2, 5, 4)
    with pytest.raises(InvalidArgument):
        Rect.bounding([])


def test_box_sides_and_spans() -> None:
    box = make_box(10, 20, 8, 4)
    assert (box.left, box.right, box.bottom, box.top) == (6, 14, 18, 22)
    assert box.span(Axis.X) == Interval(6, 14)
    assert box.span(Axis.Y) == Interval(18, 22)
    assert box.side_coordinate(Side.WEST) == 6
    assert box.side_length(Side.NORTH) == 8
    assert box.side_length(Side.EAST) == 4


def test_box_from_sides_keeps_original_size() -> None:
    box = Box.from_sides(0, 10, 0, 6, original_width=8)
    assert box.center == Point(5, 3)
    assert (box.width, box.height) == (10, 6)
    assert (box.original_width, box.original_height) == (8, 6)


def test_box_overlap_and_side_of() -> None:
    a = make_box(0, 0, 10, 10)
    b = make_box(10, 0, 10, 10)
    assert not a.overlaps(b)
    assert a.touches_or_overlaps(b)
    assert a.overlaps(b, margin=1)
    assert a.side_of(Point(5, 0)) is Side.EAST
    assert a.side_of(Point(0, -5)) is Side.SOUTH
    assert a.side_of(Point(0, 0)) is None
    assert a.side_of(Point(7, 0)) is None


def test_segment_from_points_rejects_diagonals() -> None:
    segment = OrthoSegment.from_points(Point(3, 1), Point(3, -2))
    assert segment.orientation is Orientation.VERTICAL
    assert (segment.fixed, segment.lo, segment.hi) == (3, -2, 1)
    assert segment.start == Point(3, -2)
    with pytest.raises(InvalidArgument):
        OrthoSegment.from_points(Point(0, 0), Point(1, 1))


def test_segment_intersection() -> None:
    vertical = OrthoSegment(Orientation.VERTICAL, 2, 0, 4)
    horizontal = OrthoSegment(Orientation.HORIZONTAL, 1, 0, 5)
    assert segment_intersection(vertical, horizontal) == Point(2, 1)
    assert segment_intersection(horizontal, vertical) == Point(2, 1)
    parallel = OrthoSegment(Orientation.HORIZONTAL, 1, 3, 9)
    assert segment_intersection(horizontal, parallel) == Interval(3, 5)
    assert segment_intersection(vertical, OrthoSegment(Orientation.HORIZONTAL, 7, 0, 5)) is None


def test_side_capacity() -> None:
    assert side_capacity(38, 18) == 1
    assert side_capacity(54, 18) == 2
    assert side_capacity(10, 18) == 0


@pytest.mark.parametrize(
    "label, degree, expected_width",
    [
        (None, 0, 12),
        ("abcd", 0, 32),
        ("", 2, 12),
        ("", 10, 90),
    ],
)
def test_box_from_label(label: str, degree: int, expected_width: float) -> None:
    box = box_from_label(label, degree=degree, center=Point(5, 7))
    assert box.width == expected_width
    assert box.height == 38
    assert box.center == Point(5, 7)
    assert box.original_width == box.width


def test_box_from_label_fits_every_port() -> None:
    for degree in range(0, 30):
        box = box_from_label("x", degree=degree)
        capacity = 2 * side_capacity(box.height, 18) + 2 * side_capacity(box.width, 18)
        assert capacity >= degree


def test_box_from_label_validates() -> None:
    with pytest.raises(InvalidArgument):
        box_from_label("a", base_width=0)
    with pytest.raises(InvalidArgument):
        box_from_label("a", degree=-1)


def test_simplify_polyline_and_length() -> None:
    points = [Point(0, 0), Point(0, 0), Point(4, 0), Point(9, 0), Point(9, 3)]
    assert simplify_polyline(points) == [Point(0, 0), Point(9, 0), Point(9, 3)]
    assert polyline_length(points) == 12
    assert math.isclose(make_box(0, 0, 3, 4).diagonal, 5)
