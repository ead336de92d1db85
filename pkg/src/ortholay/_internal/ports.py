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

import logging
import math
from typing import Iterator, Mapping, NamedTuple, final

from .enums import Orientation, Side
from .errors import InvalidArgument
from .geometry import Box, Point
from .graph import Edge, Multigraph
from .layout import overlapping_pairs
from .utils import EPS

__all__ = ("PortKey", "Port", "PortAssignment", "assign_ports", "SIDE_ORDER")

_log = logging.getLogger(__name__)

#: ``(edge id, endpoint index)``, the endpoint index is 0 for the source.
PortKey = tuple[str, int]

#: Tie-break order of the sides.
SIDE_ORDER = (Side.NORTH, Side.EAST, Side.SOUTH, Side.WEST)

_SIDE_ANGLES = {
    Side.EAST: 0.0,
    Side.NORTH: math.pi / 2,
    Side.WEST: math.pi,
    Side.SOUTH: -math.pi / 2,
}
_QUARTER_LOW = 0.25
_QUARTER_HIGH = 0.75


class Port(NamedTuple):
    """The point where an edge attaches to its vertex box."""

    edge_id: str
    endpoint: int
    vertex_id: str
    side: Side
    position: Point

    @property
    def key(self) -> PortKey:
        return (self.edge_id, self.endpoint)


def _counterclockwise_offset(box: Box, side: Side, point: Point) -> float:
    """Distance from the side's start to ``point``, walking counterclockwise."""
    if side is Side.EAST:
        return point.y - box.bottom
    if side is Side.NORTH:
        return box.right - point.x
    if side is Side.WEST:
        return box.top - point.y
    return point.x - box.left


def _point_on_side(box: Box, side: Side, fraction: float) -> Point:
    if side is Side.EAST:
        return Point(box.right, box.bottom + fraction * box.height)
    if side is Side.NORTH:
        return Point(box.right - fraction * box.width, box.top)
    if side is Side.WEST:
        return Point(box.left, box.top - fraction * box.height)
    return Point(box.left + fraction * box.width, box.bottom)


@final
class PortAssignment:
    """
    PortAssignment()

    The ports of all edges, together with their order along every box side.

    Attributes:
        ports: Mapping of ``(edge id, endpoint index)`` to the port.
    """

    __slots__ = ("ports", "_sides")

    def __init__(
        self, ports: Mapping[PortKey, Port], sides: Mapping[tuple[str, Side], list[PortKey]]
    ) -> None:
        self.ports: dict[PortKey, Port] = dict(ports)
        self._sides = {key: list(value) for key, value in sides.items() if value}

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} ports={len(self.ports)}>"

    def __len__(self) -> int:
        return len(self.ports)

    def __iter__(self) -> Iterator[Port]:
        return iter(self.ports.values())

    def port(self, edge_id: str, endpoint: int) -> Port:
        return self.ports[edge_id, endpoint]

    def endpoints(self, edge_id: str) -> tuple[Port, Port]:
        return self.ports[edge_id, 0], self.ports[edge_id, 1]

    def on_side(self, vertex_id: str, side: Side) -> list[Port]:
        """The ports on a side, in counterclockwise order."""
        return [self.ports[key] for key in self._sides.get((vertex_id, side), ())]

    def side_population(self, vertex_id: str, side: Side) -> int:
        return len(self._sides.get((vertex_id, side), ()))

    @classmethod
    def from_positions(
        cls,
        graph: Multigraph,
        boxes: Mapping[str, Box],
        positions: Mapping[PortKey, Point],
    ) -> PortAssignment:
        """
        Creates an assignment from given port positions.

        Raises:
            InvalidArgument: A position doesn't lie on the boundary of its box.
        """
        ports: dict[PortKey, Port] = {}
        sides: dict[tuple[str, Side], list[PortKey]] = {}
        for edge in graph.edges.values():
            for endpoint in (0, 1):
                vertex_id = edge.endpoint(endpoint)
                box = boxes[vertex_id]
                point = positions[edge.id, endpoint]
                side = box.side_of(point)
                if side is None:
                    raise InvalidArgument(
                        f"Endpoint {endpoint} of edge {edge.id!r} doesn't lie"
                        f" on the box of vertex {vertex_id!r}."
                    )
                ports[edge.id, endpoint] = Port(edge.id, endpoint, vertex_id, side, point)
                sides.setdefault((vertex_id, side), []).append((edge.id, endpoint))
        for (vertex_id, side), keys in sides.items():
            box = boxes[vertex_id]
            keys.sort(
                key=lambda key: (
                    _counterclockwise_offset(box, side, ports[key].position),
                    key,
                )
            )
        return cls(ports, sides)


class _Candidate(NamedTuple):
    side: Side
    fraction: float
    angle: float


def _boundary_crossing(box: Box, dx: float, dy: float) -> _Candidate:
    """The side (and position along it) where a ray from the box centre leaves it."""
    half_width = box.width / 2
    half_height = box.height / 2
    angle = math.atan2(dy, dx)
    if abs(dx) * half_height >= abs(dy) * half_width:
        side = Side.EAST if dx > 0 else Side.WEST
        y = dy * half_width / abs(dx)
        return _Candidate(side, (y + half_height) / box.height, angle)
    side = Side.NORTH if dy > 0 else Side.SOUTH
    x = dx * half_height / abs(dy)
    return _Candidate(side, (x + half_width) / box.width, angle)


def _adjacent_side(candidate: _Candidate) -> Side:
    """The neighbouring side nearer to the crossing point."""
    upper = candidate.fraction > 0.5
    if candidate.side.orientation is Orientation.VERTICAL:
        return Side.NORTH if upper else Side.SOUTH
    return Side.EAST if upper else Side.WEST


def _outside_quarters(fraction: float) -> bool:
    return fraction < _QUARTER_LOW - EPS or fraction > _QUARTER_HIGH + EPS


def _edge_candidates(edge: Edge, boxes: Mapping[str, Box]) -> list[_Candidate]:
    source = boxes[edge.source]
    target = boxes[edge.target]
    dx = target.cx - source.cx
    dy = target.cy - source.cy
    candidates = [
        _boundary_crossing(source, dx, dy),
        _boundary_crossing(target, -dx, -dy),
    ]
    if not any(_outside_quarters(candidate.fraction) for candidate in candidates):
        return candidates

    extremity = [abs(candidate.fraction - 0.5) for candidate in candidates]
    if abs(extremity[0] - extremity[1]) <= EPS:
        moved = 0 if edge.source <= edge.target else 1
    else:
        moved = 0 if extremity[0] > extremity[1] else 1
    candidate = candidates[moved]
    candidates[moved] = candidate._replace(side=_adjacent_side(candidate))
    return candidates


def assign_ports(graph: Multigraph, boxes: Mapping[str, Box]) -> PortAssignment:
    """
    Assigns every edge endpoint to a side of its vertex box.

    An edge leaves its boxes where the segment between the box centres crosses
    their boundaries. When that happens in the outer quarter of a side, one
    endpoint moves to the adjacent side so that the edge can be drawn as an
    L-shape. The ports of a side are sorted by the angle of their edges and
    spread evenly; self-loops take two adjacent ports on the least populated
    side of their box.

    Parameters:
        graph: The graph whose edges get ports.
        boxes: The vertex boxes, keyed by vertex id.

    Raises:
        InvalidArgument: When two boxes overlap.
    """
    overlaps = overlapping_pairs(boxes)
    if overlaps:
        first, second = overlaps[0]
        raise InvalidArgument(f"Boxes of {first!r} and {second!r} overlap.")

    groups: dict[tuple[str, str], list[str]] = {}
    for edge in graph.edges.values():
        if not edge.is_self_loop:
            pair = (min(edge.source, edge.target), max(edge.source, edge.target))
            groups.setdefault(pair, []).append(edge.id)
    for edge_ids in groups.values():
        edge_ids.sort()

    entries: dict[tuple[str, Side], list[tuple[tuple[float, str, int], PortKey]]] = {}
    for edge in graph.edges.values():
        if edge.is_self_loop:
            continue
        pair = (min(edge.source, edge.target), max(edge.source, edge.target))
        parallel = groups[pair]
        for endpoint, candidate in enumerate(_edge_candidates(edge, boxes)):
            vertex_id = edge.endpoint(endpoint)
            rank = parallel.index(edge.id)
            if vertex_id == pair[1]:
                rank = len(parallel) - 1 - rank
            relative = (candidate.angle - _SIDE_ANGLES[candidate.side] + math.pi) % (
                2 * math.pi
            )
            sort_key = (round(relative, 12), edge.other(vertex_id), rank)
            entries.setdefault((vertex_id, candidate.side), []).append(
                (sort_key, (edge.id, endpoint))
            )

    sides: dict[tuple[str, Side], list[PortKey]] = {
        key: [port_key for _, port_key in sorted(value)] for key, value in entries.items()
    }

    for edge in sorted(
        (edge for edge in graph.edges.values() if edge.is_self_loop),
        key=lambda edge: edge.id,
    ):
        side = min(
            SIDE_ORDER,
            key=lambda side: (
                len(sides.get((edge.source, side), ())),
                SIDE_ORDER.index(side),
            ),
        )
        sides.setdefault((edge.source, side), []).extend(
            [(edge.id, 0), (edge.id, 1)]
        )

    ports: dict[PortKey, Port] = {}
    for (vertex_id, side), keys in sides.items():
        box = boxes[vertex_id]
        count = len(keys)
        for k, (edge_id, endpoint) in enumerate(keys, start=1):
            position = _point_on_side(box, side, k / (count + 1))
            ports[edge_id, endpoint] = Port(edge_id, endpoint, vertex_id, side, position)

    _log.debug("Assigned %d ports on %d box sides.", len(ports), len(sides))
    return PortAssignment(ports, sides)
