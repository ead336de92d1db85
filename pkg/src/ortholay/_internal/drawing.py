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

"""Drawings"""

from __future__ import annotations

from typing import TYPE_CHECKING, Mapping, NamedTuple, Optional, Sequence, final

from .enums import Direction, Orientation
from .errors import InvalidArgument
from .geometry import Box, OrthoSegment, Point, Rect, polyline_length
from .graph import Multigraph
from .utils import EPS

if TYPE_CHECKING:
    from .nudging import ConstraintArc
    from .ordering import BundleOrder
    from .ports import PortAssignment
    from .routing_graph import RoutingGraph

__all__ = ("Route", "Drawing")


class Route(NamedTuple):
    """
    The drawn polyline of an edge.

    ``segment_edges`` holds, for every segment, the ids of the routing graph
    edges it runs over. It is empty for routes that weren't routed in a
    routing graph.
    """

    edge_id: str
    points: tuple[Point, ...]
    segment_edges: tuple[frozenset[int], ...] = ()

    @property
    def segment_count(self) -> int:
        return max(len(self.points) - 1, 0)

    def orientation(self, index: int) -> Orientation:
        start, end = self.points[index], self.points[index + 1]
        if abs(start.y - end.y) <= EPS and abs(start.x - end.x) > EPS:
            return Orientation.HORIZONTAL
        if abs(start.x - end.x) <= EPS:
            return Orientation.VERTICAL
        raise InvalidArgument(f"Segment {index} of edge {self.edge_id!r} is diagonal.")

    def direction(self, index: int) -> Direction:
        """The direction the segment is traversed in, from source to target."""
        start, end = self.points[index], self.points[index + 1]
        return Direction.between(end.x - start.x, end.y - start.y)

    def segment(self, index: int) -> OrthoSegment:
        return OrthoSegment.from_points(
            self.points[index], self.points[index + 1], self.edge_id
        )

    def segments(self) -> list[OrthoSegment]:
        return [self.segment(index) for index in range(self.segment_count)]

    def edges_of(self, index: int) -> frozenset[int]:
        if not self.segment_edges:
            return frozenset()
        return self.segment_edges[index]

    @property
    def length(self) -> float:
        return polyline_length(self.points)

    @property
    def bends(self) -> int:
        """Orientation changes along the route."""
        bends = 0
        previous: Optional[Orientation] = None
        for index in range(self.segment_count):
            start, end = self.points[index], self.points[index + 1]
            if abs(start.x - end.x) + abs(start.y - end.y) <= EPS:
                continue
            orientation = self.orientation(index)
            if previous is not None and orientation is not previous:
                bends += 1
            previous = orientation
        return bends

    def is_orthogonal(self) -> bool:
        return all(
            abs(start.x - end.x) <= EPS or abs(start.y - end.y) <= EPS
            for start, end in zip(self.points, self.points[1:])
        )

    def alternates(self) -> bool:
        """Whether consecutive segments are never collinear."""
        try:
            orientations = [self.orientation(i) for i in range(self.segment_count)]
        except InvalidArgument:
            return False
        return all(a is not b for a, b in zip(orientations, orientations[1:]))


@final
class Drawing:
    """
    Drawing(graph, boxes, routes, ...)

    A graph drawing: the boxes of the vertices and the routes of the edges,
    with the intermediate results of the stages that produced it.

    Attributes:
        graph: The drawn graph.
        boxes: The box of every vertex.
        routes: The route of every edge.
        ports: The port assignment, if ports were assigned.
        routing_graph: The routing graph the edges were routed in.
        bundle_order: The order of the paths on every routing graph edge.
        constraint_arcs: The constraint graph arcs of the nudging passes.
    """

    __slots__ = (
        "graph",
        "boxes",
        "routes",
        "ports",
        "routing_graph",
        "bundle_order",
        "constraint_arcs",
    )

    def __init__(
        self,
        graph: Multigraph,
        boxes: Mapping[str, Box],
        routes: Mapping[str, Route],
        *,
        ports: Optional[PortAssignment] = None,
        routing_graph: Optional[RoutingGraph] = None,
        bundle_order: Optional[BundleOrder] = None,
        constraint_arcs: Sequence[ConstraintArc] = (),
    ) -> None:
        self.graph = graph
        self.boxes: dict[str, Box] = dict(boxes)
        self.routes: dict[str, Route] = dict(routes)
        self.ports = ports
        self.routing_graph = routing_graph
        self.bundle_order = bundle_order
        self.constraint_arcs = list(constraint_arcs)

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__} boxes={len(self.boxes)}"
            f" routes={len(self.routes)}>"
        )

    def bounding_rect(self) -> Rect:
        """The bounding box of all boxes and routes."""
        points = [
            corner
            for box in self.boxes.values()
            for corner in (Point(box.left, box.bottom), Point(box.right, box.top))
        ]
        for route in self.routes.values():
            points.extend(route.points)
        return Rect.bounding(points)

    def replace(self, **changes: object) -> Drawing:
        """A copy with some attributes replaced."""
        values = {name: getattr(self, name) for name in self.__slots__}
        values.update(changes)
        graph = values.pop("graph")
        boxes = values.pop("boxes")
        routes = values.pop("routes")
        return Drawing(graph, boxes, routes, **values)  # type: ignore[arg-type]
