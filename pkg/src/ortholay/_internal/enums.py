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

from __future__ import annotations

from enum import Enum
from typing import final

__all__ = (
    "Orientation",
    "Direction",
    "Side",
    "Axis",
    "ObjectKind",
    "NudgeMode",
    "PipelineMode",
    "InstanceFormat",
    "LPStatus",
)


@final
class Orientation(Enum):
    """
    Orientation()

    Specifies the orientation of an axis-aligned segment.
    """

    #: The segment is parallel to the x-axis.
    HORIZONTAL = "horizontal"
    #: The segment is parallel to the y-axis.
    VERTICAL = "vertical"

    @property
    def other(self) -> Orientation:
        if self is Orientation.HORIZONTAL:
            return Orientation.VERTICAL
        return Orientation.HORIZONTAL


@final
class Direction(Enum):
    """
    Direction()

    Specifies a compass direction. The values are the number of counterclockwise
    quarter turns from the positive x-axis; the y-axis points north.
    """

    #: Towards positive x.
    EAST = 0
    #: Towards positive y.
    NORTH = 1
    #: Towards negative x.
    WEST = 2
    #: Towards negative y.
    SOUTH = 3

    @property
    def dx(self) -> int:
        return (1, 0, -1, 0)[self.value]

    @property
    def dy(self) -> int:
        return (0, 1, 0, -1)[self.value]

    @property
    def orientation(self) -> Orientation:
        if self.value % 2 == 0:
            return Orientation.HORIZONTAL
        return Orientation.VERTICAL

    @property
    def opposite(self) -> Direction:
        return Direction((self.value + 2) % 4)

    def rotated(self, quarter_turns: int) -> Direction:
        """Returns the direction rotated counterclockwise by ``quarter_turns``."""
        return Direction((self.value + quarter_turns) % 4)

    @classmethod
    def between(cls, dx: float, dy: float) -> Direction:
        """Returns the direction of an axis-aligned, non-zero displacement."""
        if abs(dx) >= abs(dy):
            return cls.EAST if dx > 0 else cls.WEST
        return cls.NORTH if dy > 0 else cls.SOUTH


@final
class Side(Enum):
    """
    Side()

    Specifies a side of a vertex box.
    """

    #: The top side.
    NORTH = "N"
    #: The right side.
    EAST = "E"
    #: The bottom side.
    SOUTH = "S"
    #: The left side.
    WEST = "W"

    @property
    def outward(self) -> Direction:
        """The direction pointing away from the box through this side."""
        return _SIDE_DIRECTIONS[self]

    @property
    def orientation(self) -> Orientation:
        """The orientation of the side itself."""
        if self in (Side.NORTH, Side.SOUTH):
            return Orientation.HORIZONTAL
        return Orientation.VERTICAL


_SIDE_DIRECTIONS = {
    Side.NORTH: Direction.NORTH,
    Side.EAST: Direction.EAST,
    Side.SOUTH: Direction.SOUTH,
    Side.WEST: Direction.WEST,
}


@final
class Axis(Enum):
    """
    Axis()

    Specifies the axis a nudging pass moves objects along.
    """

    #: Horizontal pass: vertical segments and left/right box sides move along x.
    X = "H"
    #: Vertical pass: horizontal segments and bottom/top box sides move along y.
    Y = "V"

    @property
    def index(self) -> int:
        """Index of the axis in a ``(x, y)`` point."""
        return 0 if self is Axis.X else 1

    @property
    def moving_orientation(self) -> Orientation:
        """Orientation of the segments that are objects of a pass along this axis."""
        if self is Axis.X:
            return Orientation.VERTICAL
        return Orientation.HORIZONTAL


@final
class ObjectKind(Enum):
    """
    ObjectKind()

    Specifies the kind of an object taking part in a nudging pass.
    """

    #: A path segment.
    SEGMENT = "segment"
    #: The low side of a box (left in a horizontal pass, bottom in a vertical one).
    BOX_LOW = "box-low"
    #: The high side of a box (right in a horizontal pass, top in a vertical one).
    BOX_HIGH = "box-high"
    #: The leading dummy bar (α).
    DUMMY_LOW = "alpha"
    #: The trailing dummy bar (ω).
    DUMMY_HIGH = "omega"

    @property
    def is_box_side(self) -> bool:
        return self in (ObjectKind.BOX_LOW, ObjectKind.BOX_HIGH)

    @property
    def is_dummy(self) -> bool:
        return self in (ObjectKind.DUMMY_LOW, ObjectKind.DUMMY_HIGH)


@final
class NudgeMode(Enum):
    """
    NudgeMode()

    Specifies how much the nudging step is allowed to move.
    """

    #: Boxes and port segments stay where they are.
    CONSTRAINED = "constrained"
    #: Everything moves, boxes may grow and a minimum object distance is enforced.
    FULL = "full"


@final
class PipelineMode(Enum):
    """
    PipelineMode()

    Specifies where the pipeline starts.
    """

    #: Compute vertex positions with a force-directed layout and remove overlaps.
    FORCE = "force"
    #: Use the vertex positions (or boxes) supplied by the instance.
    GIVEN_POSITIONS = "given-positions"
    #: Use the supplied boxes and edge routes, only order and nudge.
    GIVEN_ROUTING = "given-routing"


@final
class InstanceFormat(Enum):
    """
    InstanceFormat()

    Specifies the serialization format of an instance document.
    """

    #: UTF-8 JSON text.
    JSON = "json"
    #: MessagePack, requires the ``msgpack`` extra.
    MSGPACK = "msgpack"


@final
class LPStatus(Enum):
    """
    LPStatus()

    Specifies the outcome of solving a linear program.
    """

    #: An optimal assignment was found.
    OPTIMAL = "optimal"
    #: The constraints can't be satisfied.
    INFEASIBLE = "infeasible"
    #: The objective can be decreased without bound.
    UNBOUNDED = "unbounded"
