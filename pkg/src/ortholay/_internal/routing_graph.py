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

import bisect
import heapq
import itertools
import logging
import math
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, final

import networkx as nx
import numpy as np

from .enums import Axis, Direction, Orientation, Side
from .errors import ConstructionFailure, InvalidArgument
from .geometry import Box, Interval, OrthoSegment, Point, Rect
from .graph import Multigraph
from .ports import Port, PortAssignment, PortKey
from .utils import EPS, snap

__all__ = (
    "LEFT_BORDER",
    "RIGHT_BORDER",
    "BOTTOM_BORDER",
    "TOP_BORDER",
    "Channel",
    "Representative",
    "RoutingGraph",
    "default_bounds",
    "find_channels",
    "select_representatives",
    "merge_collinear_representatives",
    "build_routing_graph",
    "construct_routing_graph",
)

_log = logging.getLogger(__name__)

LEFT_BORDER = "border:left"
RIGHT_BORDER = "border:right"
BOTTOM_BORDER = "border:bottom"
TOP_BORDER = "border:top"

#: Bounds margin used when the minimum object distance is 0.
DEFAULT_BOUNDS_MARGIN = 24.0
_RING_OFFSET_FACTOR = 0.4


class Channel(NamedTuple):
    """
    An empty rectangle between two box sides (or a box side and a border).

    A vertical channel lies between the right side of ``low`` and the left
    side of ``high``; a horizontal one between the top of ``low`` and the
    bottom of ``high``.
    """

    orientation: Orientation
    rect: Rect
    low: str
    high: str

    @property
    def projection(self) -> Interval:
        """The extent of the channel along its orientation."""
        if self.orientation is Orientation.VERTICAL:
            return Interval(self.rect.y0, self.rect.y1)
        return Interval(self.rect.x0, self.rect.x1)

    @property
    def name(self) -> str:
        return f"channel:{self.low}|{self.high}"


class Representative(NamedTuple):
    """A straight line segment carrying routing graph vertices."""

    orientation: Orientation
    fixed: float
    lo: float
    hi: float
    source: str

    @property
    def segment(self) -> OrthoSegment:
        return OrthoSegment(self.orientation, self.fixed, self.lo, self.hi, self.source)

    def point_at(self, along: float) -> Point:
        if self.orientation is Orientation.HORIZONTAL:
            return Point(along, self.fixed)
        return Point(self.fixed, along)


def _overlaps_open(a: Interval, b: Interval) -> bool:
    return min(a.hi, b.hi) - max(a.lo, b.lo) > EPS


def _free_gaps(blockers: Iterable[Interval], span: Interval) -> list[Interval]:
    """The maximal sub-intervals of ``span`` not covered by any blocker."""
    gaps = []
    cursor = span.lo
    for blocker in sorted(blockers):
        gap_hi = min(blocker.lo, span.hi)
        if gap_hi > cursor + EPS:
            gaps.append(Interval(cursor, gap_hi))
        cursor = max(cursor, blocker.hi)
        if cursor >= span.hi - EPS:
            break
    if span.hi > cursor + EPS:
        gaps.append(Interval(cursor, span.hi))
    return gaps


def _tallest_gap(
    blockers: Iterable[Interval], span: Interval, low: Interval, high: Interval
) -> Optional[Interval]:
    best: Optional[Interval] = None
    for gap in _free_gaps(blockers, span):
        if _overlaps_open(gap, low) and _overlaps_open(gap, high):
            if best is None or gap.length > best.length + EPS:
                best = gap
    return best


_NOTHING: tuple[float, str] = (math.inf, "")


@final
class _NearestLeftSide:
    """
    A segment tree over the elementary intervals of the y-axis.

    Every node remembers the smallest ``(left side, object id)`` of the
    boxes inserted over its whole range (its tag) and over any part of it.
    """

    __slots__ = ("_size", "_tags", "_lowest")

    def __init__(self, size: int) -> None:
        self._size = max(size, 1)
        self._tags = [_NOTHING] * (4 * self._size)
        self._lowest = [_NOTHING] * (4 * self._size)

    def insert(self, lo: int, hi: int, value: tuple[float, str]) -> None:
        """Inserts a box covering the elementary intervals ``lo`` to ``hi - 1``."""
        self._insert(0, 0, self._size, lo, hi, value)

    def _insert(
        self, node: int, node_lo: int, node_hi: int, lo: int, hi: int, value: tuple[float, str]
    ) -> None:
        if hi <= node_lo or node_hi <= lo or lo >= hi:
            return
        self._lowest[node] = min(self._lowest[node], value)
        if lo <= node_lo and node_hi <= hi:
            self._tags[node] = min(self._tags[node], value)
            return
        mid = (node_lo + node_hi) // 2
        self._insert(2 * node + 1, node_lo, mid, lo, hi, value)
        self._insert(2 * node + 2, mid, node_hi, lo, hi, value)

    def lowest(self, lo: int, hi: int) -> tuple[float, str]:
        """The smallest value inserted over any of the elementary intervals ``lo`` to ``hi - 1``."""
        return self._lowest_in(0, 0, self._size, lo, hi)

    def _lowest_in(
        self, node: int, node_lo: int, node_hi: int, lo: int, hi: int
    ) -> tuple[float, str]:
        if hi <= node_lo or node_hi <= lo or lo >= hi:
            return _NOTHING
        if lo <= node_lo and node_hi <= hi:
            return self._lowest[node]
        mid = (node_lo + node_hi) // 2
        return min(
            self._tags[node],
            self._lowest_in(2 * node + 1, node_lo, mid, lo, hi),
            self._lowest_in(2 * node + 2, mid, node_hi, lo, hi),
        )


def _right_channels(
    rects: Mapping[str, Rect], bounds: Rect, low_border: str, high_border: str
) -> dict[tuple[str, str], Rect]:
    """
    Finds the narrowest channel to the right of every object.

    The objects are swept from right to left. The boxes crossing the sweep
    line are kept sorted by their bottom side and give the free gaps next to
    each object. The boxes already passed are kept in a segment tree, which
    yields the nearest box facing one of those gaps.
    """
    span = Interval(bounds.y0, bounds.y1)
    objects = sorted(rects.items())
    sources = sorted(
        [(low_border, Rect(bounds.x0, bounds.y0, bounds.x0, bounds.y1)), *objects],
        key=lambda item: -item[1].x1,
    )
    targets = dict(objects)
    targets[high_border] = Rect(bounds.x1, bounds.y0, bounds.x1, bounds.y1)
    by_left = sorted(targets.items(), key=lambda item: -item[1].x0)
    by_right = sorted(objects, key=lambda item: -item[1].x1)

    levels = sorted(
        {snap(value) for rect in targets.values() for value in (rect.y0, rect.y1)}
        | {snap(span.lo), snap(span.hi)}
    )
    level_index = {level: index for index, level in enumerate(levels)}
    nearest = _NearestLeftSide(len(levels) - 1)

    crossing: list[tuple[float, float, str]] = []
    entered = passed = 0
    channels: dict[tuple[str, str], Rect] = {}
    for source_id, source in sources:
        right = source.x1
        while entered < len(by_right) and by_right[entered][1].x1 > right + EPS:
            object_id, rect = by_right[entered]
            bisect.insort(crossing, (rect.y0, rect.y1, object_id))
            entered += 1
        while passed < len(by_left) and by_left[passed][1].x0 > right + EPS:
            target_id, rect = by_left[passed]
            nearest.insert(
                level_index[snap(rect.y0)], level_index[snap(rect.y1)], (rect.x0, target_id)
            )
            key = (rect.y0, rect.y1, target_id)
            at = bisect.bisect_left(crossing, key)
            if at < len(crossing) and crossing[at] == key:
                del crossing[at]
            passed += 1

        # the crossing boxes are disjoint, so their neighbours bound the gaps
        first = max(bisect.bisect_right(crossing, (source.y0, math.inf)) - 1, 0)
        last = bisect.bisect_left(crossing, (source.y1,)) + 1
        blockers = [Interval(lo, hi) for lo, hi, _ in crossing[first:last]]
        source_span = Interval(source.y0, source.y1)
        gaps = [gap for gap in _free_gaps(blockers, span) if _overlaps_open(gap, source_span)]
        if not gaps:
            continue
        left, target_id = min(
            nearest.lowest(level_index[snap(gap.lo)], level_index[snap(gap.hi)]) for gap in gaps
        )
        if math.isinf(left):
            continue
        target = targets[target_id]
        gap = _tallest_gap(blockers, span, source_span, Interval(target.y0, target.y1))
        if gap is not None:
            channels[source_id, target_id] = Rect(right, gap.lo, left, gap.hi)
    return channels


def _mirrored(rect: Rect) -> Rect:
    return Rect(-rect.x1, rect.y0, -rect.x0, rect.y1)


def _vertical_channels(
    rects: Mapping[str, Rect], bounds: Rect, low_border: str, high_border: str
) -> dict[tuple[str, str], Rect]:
    channels = _right_channels(rects, bounds, low_border, high_border)
    mirrored = {object_id: _mirrored(rect) for object_id, rect in rects.items()}
    for (a, b), rect in _right_channels(
        mirrored, _mirrored(bounds), high_border, low_border
    ).items():
        channels.setdefault((b, a), _mirrored(rect))
    return channels


def default_bounds(boxes: Mapping[str, Box], delta_min: float) -> Rect:
    """The bounding box of all boxes, inflated by twice the minimum object distance."""
    if not boxes:
        raise InvalidArgument("Can't compute the bounds of no boxes.")
    margin = 2 * delta_min if delta_min > 0 else DEFAULT_BOUNDS_MARGIN
    rects = [box.rect for box in boxes.values()]
    return Rect(
        min(rect.x0 for rect in rects),
        min(rect.y0 for rect in rects),
        max(rect.x1 for rect in rects),
        max(rect.y1 for rect in rects),
    ).inflated(margin)


def find_channels(boxes: Mapping[str, Box], bounds: Rect) -> list[Channel]:
    """
    Finds the channels between the boxes.

    For every box (and the drawing borders) the narrowest vertical channel to
    its left and to its right is kept, and likewise the narrowest horizontal
    channel below and above it. The borders act as boxes of zero width and
    infinite height.

    Raises:
        InvalidArgument: A box isn't inside ``bounds``.
    """
    rects = {}
    for vertex_id, box in boxes.items():
        if not bounds.contains_rect(box.rect):
            raise InvalidArgument(f"Box of vertex {vertex_id!r} is outside the bounds.")
        rects[vertex_id] = box.rect

    channels = [
        Channel(Orientation.VERTICAL, rect, low, high)
        for (low, high), rect in sorted(
            _vertical_channels(rects, bounds, LEFT_BORDER, RIGHT_BORDER).items()
        )
    ]
    transposed = {vertex_id: rect.transposed() for vertex_id, rect in rects.items()}
    channels.extend(
        Channel(Orientation.HORIZONTAL, rect.transposed(), low, high)
        for (low, high), rect in sorted(
            _vertical_channels(
                transposed, bounds.transposed(), BOTTOM_BORDER, TOP_BORDER
            ).items()
        )
    )
    _log.debug("Found %d channels.", len(channels))
    return channels


def _across(channel: Channel) -> Interval:
    if channel.orientation is Orientation.VERTICAL:
        return Interval(channel.rect.x0, channel.rect.x1)
    return Interval(channel.rect.y0, channel.rect.y1)


def _dominates(other: Channel, channel: Channel, other_first: bool) -> bool:
    projection = channel.projection
    if not other.projection.contains_interval(projection):
        return False
    return other_first or not projection.contains_interval(other.projection)


def _prune_dominated(channels: Sequence[Channel]) -> list[Channel]:
    """
    Drops every channel whose projection lies inside the projection of a
    channel it intersects. Of two such channels with equal projections the
    first one stays.

    The channels of each orientation are swept across their projection axis
    and only compared with the channels still open at the sweep line.
    """
    dominated = [False] * len(channels)
    for orientation in Orientation:
        order = sorted(
            (index for index, channel in enumerate(channels) if channel.orientation is orientation),
            key=lambda index: _across(channels[index]).lo,
        )
        closing: list[tuple[float, int]] = []
        active: set[int] = set()
        for i in order:
            channel = channels[i]
            start = _across(channel).lo
            while closing and closing[0][0] <= start + EPS:
                active.discard(heapq.heappop(closing)[1])
            for j in active:
                other = channels[j]
                if not channel.rect.intersects_interior(other.rect):
                    continue
                if _dominates(other, channel, j < i):
                    dominated[i] = True
                if _dominates(channel, other, i < j):
                    dominated[j] = True
            heapq.heappush(closing, (_across(channel).hi, i))
            active.add(i)
    return [channel for channel, drop in zip(channels, dominated) if not drop]


def _side_line(port: Port) -> float:
    if port.side.orientation is Orientation.HORIZONTAL:
        return port.position.y
    return port.position.x


def _port_index(ports: PortAssignment) -> dict[tuple[Side, float], list[Port]]:
    index: dict[tuple[Side, float], list[Port]] = {}
    for port in sorted(ports, key=lambda port: port.key):
        index.setdefault((port.side, snap(_side_line(port))), []).append(port)
    return index


def _channel_representative(
    channel: Channel, port_index: Mapping[tuple[Side, float], list[Port]]
) -> Representative:
    rect = channel.rect
    if channel.orientation is Orientation.VERTICAL:
        across = Interval(rect.x0, rect.x1)
        lo, hi = rect.y0, rect.y1
        candidates = [
            *port_index.get((Side.NORTH, snap(rect.y0)), ()),
            *port_index.get((Side.SOUTH, snap(rect.y1)), ()),
        ]
        coordinates = [port.position.x for port in candidates]
    else:
        across = Interval(rect.y0, rect.y1)
        lo, hi = rect.x0, rect.x1
        candidates = [
            *port_index.get((Side.EAST, snap(rect.x0)), ()),
            *port_index.get((Side.WEST, snap(rect.x1)), ()),
        ]
        coordinates = [port.position.y for port in candidates]

    best: Optional[tuple[float, PortKey, float]] = None
    for port, coordinate in zip(candidates, coordinates):
        if not across.lo + EPS < coordinate < across.hi - EPS:
            continue
        key = (abs(coordinate - across.middle), port.key, coordinate)
        if best is None or key[:2] < best[:2]:
            best = key
    fixed = across.middle if best is None else best[2]
    return Representative(channel.orientation, fixed, lo, hi, channel.name)


def _ray_length(
    origin: Point,
    direction: Direction,
    boxes: Iterable[Box],
    bounds: Rect,
    representatives: Sequence[Representative] = (),
) -> float:
    """
    Distance from ``origin`` to the first obstacle in ``direction``.

    When representatives are given, the ray also stops at the first one
    it crosses.
    """
    sign = 1 if direction in (Direction.EAST, Direction.NORTH) else -1
    if direction.orientation is Orientation.HORIZONTAL:
        along, across = origin.x, origin.y
        border = bounds.x1 if sign > 0 else bounds.x0
    else:
        along, across = origin.y, origin.x
        border = bounds.y1 if sign > 0 else bounds.y0
    length = max((border - along) * sign, 0.0)

    for box in boxes:
        if direction.orientation is Orientation.HORIZONTAL:
            near, far, perpendicular = box.left, box.right, box.span(Axis.Y)
        else:
            near, far, perpendicular = box.bottom, box.top, box.span(Axis.X)
        if not perpendicular.lo + EPS < across < perpendicular.hi - EPS:
            continue
        distance = near - along if sign > 0 else along - far
        if -EPS <= distance < length:
            length = max(distance, 0.0)

    crossing = direction.orientation.other
    for representative in representatives:
        if representative.orientation is not crossing:
            continue
        if not representative.lo - EPS <= across <= representative.hi + EPS:
            continue
        distance = (representative.fixed - along) * sign
        if EPS < distance < length:
            length = distance
    return length


def _leaves_through(
    port: Port, index: Mapping[tuple[Orientation, float], list[Representative]]
) -> bool:
    outward = port.side.outward
    if outward.orientation is Orientation.HORIZONTAL:
        fixed, along = port.position.y, port.position.x
    else:
        fixed, along = port.position.x, port.position.y
    sign = 1 if outward in (Direction.EAST, Direction.NORTH) else -1
    for representative in index.get((outward.orientation, snap(fixed)), ()):
        if not representative.lo - EPS <= along <= representative.hi + EPS:
            continue
        if (sign > 0 and representative.hi > along + EPS) or (
            sign < 0 and representative.lo < along - EPS
        ):
            return True
    return False


def _ray_representative(
    origin: Point, direction: Direction, length: float, source: str
) -> Representative:
    end = Point(origin.x + direction.dx * length, origin.y + direction.dy * length)
    segment = OrthoSegment.from_points(origin, end)
    return Representative(segment.orientation, segment.fixed, segment.lo, segment.hi, source)


def _ring_representatives(
    boxes: Mapping[str, Box], bounds: Rect, offset: float
) -> list[Representative]:
    obstacles = list(boxes.values())
    representatives = []
    for vertex_id, box in sorted(boxes.items()):
        left, right = box.left - offset, box.right + offset
        bottom, top = box.bottom - offset, box.top + offset
        for y, name in ((top, "N"), (bottom, "S")):
            lo = left - _ray_length(Point(left, y), Direction.WEST, obstacles, bounds)
            hi = right + _ray_length(Point(right, y), Direction.EAST, obstacles, bounds)
            representatives.append(
                Representative(Orientation.HORIZONTAL, y, lo, hi, f"ring:{vertex_id}:{name}")
            )
        for x, name in ((right, "E"), (left, "W")):
            lo = bottom - _ray_length(Point(x, bottom), Direction.SOUTH, obstacles, bounds)
            hi = top + _ray_length(Point(x, top), Direction.NORTH, obstacles, bounds)
            representatives.append(
                Representative(Orientation.VERTICAL, x, lo, hi, f"ring:{vertex_id}:{name}")
            )
    return representatives


def _frame_representatives(bounds: Rect) -> list[Representative]:
    return [
        Representative(Orientation.HORIZONTAL, bounds.y0, bounds.x0, bounds.x1, "frame:S"),
        Representative(Orientation.HORIZONTAL, bounds.y1, bounds.x0, bounds.x1, "frame:N"),
        Representative(Orientation.VERTICAL, bounds.x0, bounds.y0, bounds.y1, "frame:W"),
        Representative(Orientation.VERTICAL, bounds.x1, bounds.y0, bounds.y1, "frame:E"),
    ]


def _minimum_separation(boxes: Mapping[str, Box]) -> Optional[float]:
    separations = [
        max(a.gap(b))
        for a, b in itertools.combinations(boxes.values(), 2)
    ]
    return min(separations) if separations else None


def select_representatives(
    channels: Sequence[Channel],
    ports: PortAssignment,
    boxes: Mapping[str, Box],
    bounds: Rect,
    *,
    repair: bool = False,
) -> list[Representative]:
    """
    Chooses one representative per channel and adds port stubs.

    Channels whose projection is contained in the projection of another
    channel intersecting them are dropped. A representative starts at a port
    on the channel boundary when there is one (the port nearest to the
    centre line wins), otherwise it runs along the centre line. Every port
    that no representative leaves through gets a stub that runs away from
    its box up to the first representative it crosses.

    Parameters:
        channels: The channels from `find_channels()`.
        ports: The port assignment.
        boxes: The vertex boxes.
        bounds: The drawing bounds.
        repair:
            Surround every box with a ring, frame the bounds and run the
            stubs up to the first obstacle. The routing graph built from
            such representatives connects every pair of ports.
    """
    port_index = _port_index(ports)
    representatives = [
        _channel_representative(channel, port_index)
        for channel in _prune_dominated(channels)
    ]
    if repair:
        separation = _minimum_separation(boxes)
        margin = min(
            bounds.x1 - max(box.right for box in boxes.values()),
            min(box.left for box in boxes.values()) - bounds.x0,
            bounds.y1 - max(box.top for box in boxes.values()),
            min(box.bottom for box in boxes.values()) - bounds.y0,
        )
        if separation is not None:
            margin = min(margin, separation)
        representatives.extend(
            _ring_representatives(boxes, bounds, _RING_OFFSET_FACTOR * margin)
        )
        representatives.extend(_frame_representatives(bounds))

    index: dict[tuple[Orientation, float], list[Representative]] = {}
    for representative in representatives:
        index.setdefault(
            (representative.orientation, snap(representative.fixed)), []
        ).append(representative)

    obstacles = list(boxes.values())
    stubs = []
    for port in sorted(ports, key=lambda port: port.key):
        if _leaves_through(port, index):
            continue
        direction = port.side.outward
        length = _ray_length(
            port.position,
            direction,
            obstacles,
            bounds,
            () if repair else representatives,
        )
        if length <= EPS:
            continue
        stubs.append(
            _ray_representative(
                port.position, direction, length, f"stub:{port.edge_id}/{port.endpoint}"
            )
        )
    representatives.extend(stubs)
    _log.debug(
        "Selected %d representatives (%d stubs, repair=%s).",
        len(representatives),
        len(stubs),
        repair,
    )
    return representatives


def merge_collinear_representatives(
    representatives: Iterable[Representative],
) -> list[Representative]:
    """Merges representatives on a common line whose spans overlap or touch."""
    lines: dict[tuple[int, float], list[Representative]] = {}
    for representative in representatives:
        if representative.hi - representative.lo <= EPS:
            continue
        key = (
            0 if representative.orientation is Orientation.VERTICAL else 1,
            snap(representative.fixed),
        )
        lines.setdefault(key, []).append(representative)

    merged = []
    for _, line in sorted(lines.items(), key=lambda item: item[0]):
        line.sort(key=lambda representative: (representative.lo, representative.hi))
        current = line[0]
        for representative in line[1:]:
            if representative.lo <= current.hi + EPS:
                if representative.hi > current.hi:
                    current = current._replace(hi=representative.hi)
            else:
                merged.append(current)
                current = representative
        merged.append(current)
    return merged


@final
class RoutingGraph:
    """
    RoutingGraph()

    The sparse partial grid the edges are routed in.

    Vertices are the ports and the intersections of representatives; edges
    join consecutive vertices along a representative. Each vertex has at most
    one neighbour per compass direction.

    Attributes:
        points: The position of every vertex.
        edges:
            The edges as vertex pairs, ordered by their id. The first vertex
            is the one with the smaller coordinate.
        neighbours: For every vertex, its neighbour in each direction.
        port_vertices: The vertex of every port.
        channels: The channels the graph was built from, for debugging.
        representatives: The merged representatives, for debugging.
    """

    __slots__ = (
        "points",
        "edges",
        "neighbours",
        "port_vertices",
        "vertex_ports",
        "channels",
        "representatives",
        "_edge_ids",
        "_vertex_keys",
    )

    def __init__(
        self,
        points: Sequence[Point],
        edges: Sequence[tuple[int, int]],
        port_vertices: Mapping[PortKey, int],
        *,
        channels: Sequence[Channel] = (),
        representatives: Sequence[Representative] = (),
    ) -> None:
        self.points = list(points)
        self.edges = list(edges)
        self.neighbours: list[dict[Direction, int]] = [{} for _ in self.points]
        self._edge_ids: dict[tuple[int, int], int] = {}
        for edge_id, (a, b) in enumerate(self.edges):
            direction = self.direction(a, b)
            if direction in self.neighbours[a] or direction.opposite in self.neighbours[b]:
                raise ConstructionFailure(
                    f"Routing graph vertex {self.points[a]} has two neighbours"
                    f" towards {direction.name}."
                )
            self.neighbours[a][direction] = b
            self.neighbours[b][direction.opposite] = a
            self._edge_ids[a, b] = self._edge_ids[b, a] = edge_id
        self.port_vertices: dict[PortKey, int] = dict(port_vertices)
        self.vertex_ports: dict[int, PortKey] = {
            vertex: key for key, vertex in self.port_vertices.items()
        }
        self.channels = list(channels)
        self.representatives = list(representatives)
        self._vertex_keys = {
            (snap(point.x), snap(point.y)): index for index, point in enumerate(self.points)
        }

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} vertices={len(self.points)} M={self.M}>"

    @property
    def M(self) -> int:
        """The number of edges."""
        return len(self.edges)

    def edge_id(self, a: int, b: int) -> int:
        return self._edge_ids[a, b]

    def edge_orientation(self, edge_id: int) -> Orientation:
        a, b = self.edges[edge_id]
        return self.direction(a, b).orientation

    def direction(self, a: int, b: int) -> Direction:
        """The direction from vertex ``a`` to vertex ``b``."""
        start, end = self.points[a], self.points[b]
        return Direction.between(end.x - start.x, end.y - start.y)

    def degree(self, vertex: int) -> int:
        return len(self.neighbours[vertex])

    def is_port(self, vertex: int) -> bool:
        return vertex in self.vertex_ports

    def vertex_at(self, point: Point) -> Optional[int]:
        return self._vertex_keys.get((snap(point.x), snap(point.y)))

    def length(self, edge_id: int) -> float:
        a, b = self.edges[edge_id]
        start, end = self.points[a], self.points[b]
        return abs(end.x - start.x) + abs(end.y - start.y)

    def to_networkx(self, *, include_ports: bool = True) -> nx.Graph:
        graph = nx.Graph()
        for vertex in range(len(self.points)):
            if include_ports or vertex not in self.vertex_ports:
                graph.add_node(vertex)
        for edge_id, (a, b) in enumerate(self.edges):
            if graph.has_node(a) and graph.has_node(b):
                graph.add_edge(a, b, id=edge_id, length=self.length(edge_id))
        return graph

    def disconnected_edges(self, graph: Multigraph) -> list[str]:
        """
        The ids of the edges whose ports can't reach each other.

        Port vertices other than the two ends of a path can't be passed through.
        """
        inner = self.to_networkx(include_ports=False)
        component_of: dict[int, int] = {}
        for index, component in enumerate(nx.connected_components(inner)):
            for vertex in component:
                component_of[vertex] = index

        def components(vertex: int) -> set[int]:
            return {
                component_of[neighbour]
                for neighbour in self.neighbours[vertex].values()
                if neighbour in component_of
            }

        disconnected = []
        for edge in graph.edges.values():
            source = self.port_vertices.get((edge.id, 0))
            target = self.port_vertices.get((edge.id, 1))
            if source is None or target is None:
                disconnected.append(edge.id)
                continue
            if source == target or target in self.neighbours[source].values():
                continue
            if not components(source) & components(target):
                disconnected.append(edge.id)
        return disconnected

    def trace(self, points: Sequence[Point]) -> list[int]:
        """
        Maps a polyline whose corners are vertices onto a vertex sequence.

        Raises:
            InvalidArgument: The polyline leaves the routing graph.
        """
        first = self.vertex_at(points[0])
        if first is None:
            raise InvalidArgument(f"Polyline start {points[0]} is not a vertex.")
        path = [first]
        for start, end in zip(points, points[1:]):
            target = self.vertex_at(end)
            if target is None:
                raise InvalidArgument(f"Polyline corner {end} is not a vertex.")
            if target == path[-1]:
                continue
            direction = Direction.between(end.x - start.x, end.y - start.y)
            current = path[-1]
            while current != target:
                following = self.neighbours[current].get(direction)
                if following is None:
                    raise InvalidArgument(
                        f"Polyline segment {start} -> {end} leaves the routing graph."
                    )
                path.append(following)
                current = following
        return path

    @classmethod
    def from_polylines(
        cls, polylines: Mapping[str, Sequence[Point]], ports: PortAssignment
    ) -> RoutingGraph:
        """Builds the routing graph formed by already routed edges."""
        representatives = []
        for edge_id, points in polylines.items():
            for start, end in zip(points, points[1:]):
                if abs(start.x - end.x) + abs(start.y - end.y) <= EPS:
                    continue
                segment = OrthoSegment.from_points(start, end)
                representatives.append(
                    Representative(
                        segment.orientation,
                        segment.fixed,
                        segment.lo,
                        segment.hi,
                        f"path:{edge_id}",
                    )
                )
        return build_routing_graph(representatives, ports)


def build_routing_graph(
    representatives: Iterable[Representative],
    ports: PortAssignment,
    *,
    channels: Sequence[Channel] = (),
) -> RoutingGraph:
    """
    Builds the routing graph from the representatives.

    Collinear overlapping representatives are merged first. A port becomes a
    vertex of every representative running away from its box through it.

    Raises:
        ConstructionFailure: A port has no incident edge.
    """
    merged = merge_collinear_representatives(representatives)
    stops: list[list[float]] = [[] for _ in merged]

    vertical = [i for i, rep in enumerate(merged) if rep.orientation is Orientation.VERTICAL]
    horizontal = [
        i for i, rep in enumerate(merged) if rep.orientation is Orientation.HORIZONTAL
    ]
    if vertical and horizontal:
        v = np.array([[merged[i].fixed, merged[i].lo, merged[i].hi] for i in vertical])
        h = np.array([[merged[i].fixed, merged[i].lo, merged[i].hi] for i in horizontal])
        crossing = (
            (v[:, np.newaxis, 0] >= h[np.newaxis, :, 1] - EPS)
            & (v[:, np.newaxis, 0] <= h[np.newaxis, :, 2] + EPS)
            & (h[np.newaxis, :, 0] >= v[:, np.newaxis, 1] - EPS)
            & (h[np.newaxis, :, 0] <= v[:, np.newaxis, 2] + EPS)
        )
        for a, b in zip(*np.nonzero(crossing)):
            vertical_index = vertical[int(a)]
            horizontal_index = horizontal[int(b)]
            stops[vertical_index].append(merged[horizontal_index].fixed)
            stops[horizontal_index].append(merged[vertical_index].fixed)

    lines: dict[tuple[Orientation, float], list[int]] = {}
    for i, representative in enumerate(merged):
        lines.setdefault((representative.orientation, snap(representative.fixed)), []).append(i)

    points: list[Point] = []
    keys: dict[tuple[float, float], int] = {}

    def vertex(point: Point) -> int:
        key = (snap(point.x), snap(point.y))
        index = keys.get(key)
        if index is None:
            index = keys[key] = len(points)
            points.append(point)
        return index

    port_vertices: dict[PortKey, int] = {}
    for port in sorted(ports, key=lambda port: port.key):
        port_vertices[port.key] = vertex(port.position)
        orientation = port.side.outward.orientation
        if orientation is Orientation.HORIZONTAL:
            fixed, along = port.position.y, port.position.x
        else:
            fixed, along = port.position.x, port.position.y
        for i in lines.get((orientation, snap(fixed)), ()):
            if merged[i].lo - EPS <= along <= merged[i].hi + EPS:
                stops[i].append(along)

    edges: list[tuple[int, int]] = []
    for i, representative in enumerate(merged):
        sequence: list[int] = []
        for along in sorted(stops[i]):
            index = vertex(representative.point_at(along))
            if not sequence or sequence[-1] != index:
                sequence.append(index)
        edges.extend(zip(sequence, sequence[1:]))

    routing_graph = RoutingGraph(
        points,
        edges,
        port_vertices,
        channels=channels,
        representatives=merged,
    )
    for key, index in sorted(port_vertices.items()):
        if routing_graph.degree(index) == 0:
            raise ConstructionFailure(
                f"Port {key[1]} of edge {key[0]!r} has no routing graph edge."
            )
    _log.debug(
        "Built a routing graph with %d vertices and %d edges.", len(points), len(edges)
    )
    return routing_graph


def construct_routing_graph(
    graph: Multigraph,
    boxes: Mapping[str, Box],
    ports: PortAssignment,
    *,
    delta_min: float,
    bounds: Optional[Rect] = None,
) -> RoutingGraph:
    """
    Finds channels, selects representatives and builds the routing graph.

    When a port is isolated or the ports of an edge end up disconnected, the
    graph is rebuilt with rings around the boxes.

    Raises:
        ConstructionFailure: The ports couldn't be connected even after repair.
    """
    if bounds is None:
        bounds = default_bounds(boxes, delta_min)
    channels = find_channels(boxes, bounds)
    representatives = select_representatives(channels, ports, boxes, bounds)
    try:
        routing_graph = build_routing_graph(representatives, ports, channels=channels)
    except ConstructionFailure as exc:
        reason = str(exc)
    else:
        disconnected = routing_graph.disconnected_edges(graph)
        if not disconnected:
            return routing_graph
        reason = f"disconnected ports of edges {', '.join(disconnected)}"

    _log.warning("Routing graph is incomplete (%s), adding rings around boxes.", reason)
    representatives = select_representatives(
        channels, ports, boxes, bounds, repair=True
    )
    routing_graph = build_routing_graph(representatives, ports, channels=channels)
    disconnected = routing_graph.disconnected_edges(graph)
    if disconnected:
        raise ConstructionFailure(
            f"Ports of edges {', '.join(disconnected)} are disconnected."
        )
    return routing_graph
