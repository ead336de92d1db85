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

import functools
import itertools
import logging
from typing import Iterator, Mapping, Optional, Sequence, final

from .drawing import Route
from .enums import Direction
from .errors import InvalidArgument
from .geometry import Point
from .routing import EdgePath, SharedRun, run_crosses, shared_runs
from .routing_graph import RoutingGraph
from .utils import EPS

__all__ = (
    "BundleOrder",
    "scan_direction",
    "order_paths",
    "order_crossings",
    "join_collinear",
    "routes_from_paths",
)

_log = logging.getLogger(__name__)


def scan_direction(graph: RoutingGraph, edge_id: int) -> Direction:
    """The preassigned direction of an edge: west for horizontal, south for vertical."""
    low, high = graph.edges[edge_id]
    return graph.direction(high, low)


def _leftness(travel: Direction, exit: Direction) -> int:
    """2 for a left turn, 1 for going straight and 0 for a right turn."""
    return {1: 2, 0: 1, 3: 0}[(exit.value - travel.value) % 4]


@final
class BundleOrder:
    """
    BundleOrder()

    The order of the paths on every routing graph edge.

    Paths on a horizontal edge are listed from top to bottom and on a vertical
    edge from left to right, i.e. the rightmost path relative to the edge's
    scan direction comes first.
    """

    __slots__ = ("orders", "_positions")

    def __init__(self, orders: Mapping[int, Sequence[str]]) -> None:
        self.orders: dict[int, list[str]] = {
            edge_id: list(order) for edge_id, order in orders.items()
        }
        self._positions = {
            edge_id: {path_id: index for index, path_id in enumerate(order)}
            for edge_id, order in self.orders.items()
        }

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} bundles={len(self.orders)}>"

    def __getitem__(self, edge_id: int) -> list[str]:
        return self.orders[edge_id]

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.orders

    def __iter__(self) -> Iterator[int]:
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)

    def position(self, edge_id: int, path_id: str) -> int:
        return self._positions[edge_id][path_id]

    def right_of(
        self, graph: RoutingGraph, edge_id: int, travel: Direction, a: str, b: str
    ) -> bool:
        """Whether path ``a`` runs right of path ``b`` when travelling in ``travel``."""
        earlier = self.position(edge_id, a) < self.position(edge_id, b)
        if travel is scan_direction(graph, edge_id):
            return earlier
        return not earlier


@final
class _PathComparator:
    __slots__ = ("graph", "paths", "positions", "orders")

    def __init__(self, graph: RoutingGraph, paths: Mapping[str, EdgePath]) -> None:
        self.graph = graph
        self.paths = paths
        self.positions = {
            path_id: {vertex: index for index, vertex in enumerate(path.vertices)}
            for path_id, path in paths.items()
        }
        self.orders: dict[int, dict[str, int]] = {}

    def _next_vertex(self, path_id: str, previous: int, current: int) -> Optional[int]:
        vertices = self.paths[path_id].vertices
        index = self.positions[path_id][current]
        if index >= 1 and vertices[index - 1] == previous:
            return vertices[index + 1] if index + 1 < len(vertices) else None
        if index + 1 < len(vertices) and vertices[index + 1] == previous:
            return vertices[index - 1] if index >= 1 else None
        return None

    def compare(self, edge_id: int, a: str, b: str) -> int:
        graph = self.graph
        previous, current = graph.edges[edge_id][1], graph.edges[edge_id][0]
        while True:
            next_a = self._next_vertex(a, previous, current)
            next_b = self._next_vertex(b, previous, current)
            if next_a is None or next_b is None:
                _log.warning(
                    "Paths %r and %r end inside a common subpath,"
                    " ordering them by edge id.",
                    a,
                    b,
                )
                return -1 if a < b else 1
            if next_a == next_b:
                shared = graph.edge_id(current, next_a)
                order = self.orders.get(shared)
                if order is not None:
                    difference = order[a] - order[b]
                    if graph.direction(current, next_a) is scan_direction(graph, shared):
                        return difference
                    return -difference
                previous, current = current, next_a
                continue
            travel = graph.direction(previous, current)
            return _leftness(travel, graph.direction(current, next_a)) - _leftness(
                travel, graph.direction(current, next_b)
            )

    def order(self, edge_id: int, members: list[str]) -> list[str]:
        members = sorted(members)
        if len(members) > 1:
            members.sort(key=functools.cmp_to_key(functools.partial(self.compare, edge_id)))
        self.orders[edge_id] = {path_id: index for index, path_id in enumerate(members)}
        return members


def order_paths(graph: RoutingGraph, paths: Mapping[str, EdgePath]) -> BundleOrder:
    """
    Orders the paths on every routing graph edge.

    Edges are processed by increasing id and scanned in their preassigned
    direction (west for horizontal, south for vertical edges). Two paths are
    compared by following their common subpath in scan direction up to the
    vertex where they fork, where the path turning further left is ordered
    left, or up to an already ordered edge, whose order is reused. Crossings
    that can't be avoided therefore only happen where the common subpath
    changes orientation.

    Raises:
        InvalidArgument: A path visits a vertex twice.
    """
    bundles: dict[int, list[str]] = {}
    for path_id in sorted(paths):
        path = paths[path_id]
        if not path.is_simple():
            raise InvalidArgument(f"Path of edge {path_id!r} is not simple.")
        for edge_id in path.edge_ids(graph):
            bundles.setdefault(edge_id, []).append(path_id)

    comparator = _PathComparator(graph, paths)
    orders = {
        edge_id: comparator.order(edge_id, bundles[edge_id]) for edge_id in sorted(bundles)
    }
    _log.debug("Ordered paths on %d bundles.", len(orders))
    return BundleOrder(orders)


def _run_order_changes(
    graph: RoutingGraph,
    order: BundleOrder,
    a: str,
    b: str,
    first: Sequence[int],
    second: Sequence[int],
    run: SharedRun,
) -> int:
    i, k = run.start, run.end
    if i == k:
        return int(run_crosses(graph, first, second, run))

    step = 1 if run.other_end >= run.other_start else -1
    sides = []
    if i > 0 and 0 <= run.other_start - step < len(second):
        s = first[i]
        back = graph.direction(first[i + 1], s)
        sides.append(
            _leftness(back, graph.direction(s, first[i - 1]))
            > _leftness(back, graph.direction(s, second[run.other_start - step]))
        )
    for start, end in zip(first[i:k], first[i + 1 : k + 1]):
        sides.append(
            order.right_of(
                graph, graph.edge_id(start, end), graph.direction(start, end), a, b
            )
        )
    if k + 1 < len(first) and 0 <= run.other_end + step < len(second):
        t = first[k]
        travel = graph.direction(first[k - 1], t)
        sides.append(
            _leftness(travel, graph.direction(t, first[k + 1]))
            < _leftness(travel, graph.direction(t, second[run.other_end + step]))
        )
    return sum(x != y for x, y in zip(sides, sides[1:]))


def order_crossings(
    graph: RoutingGraph, paths: Mapping[str, EdgePath], order: BundleOrder
) -> dict[tuple[str, str], int]:
    """
    Crossings of every path pair implied by the bundle order.

    Within a common subpath, each change of the side one path runs on relative
    to the other counts as a crossing, including changes at the two ends.
    Pairs without crossings are left out.
    """
    result = {}
    for a, b in itertools.combinations(sorted(paths), 2):
        first, second = paths[a].vertices, paths[b].vertices
        if set(first).isdisjoint(second):
            continue
        count = sum(
            _run_order_changes(graph, order, a, b, first, second, run)
            for run in shared_runs(first, second)
        )
        if count:
            result[a, b] = count
    return result


def _same_orientation(a: Point, b: Point, c: Point) -> bool:
    horizontal = abs(a.y - b.y) <= EPS and abs(b.y - c.y) <= EPS
    vertical = abs(a.x - b.x) <= EPS and abs(b.x - c.x) <= EPS
    return horizontal or vertical


def join_collinear(routes: Mapping[str, Route]) -> dict[str, Route]:
    """
    Joins consecutive collinear segments and drops zero-length ones.

    The routing graph edges of joined segments are merged, so that the
    segments of every route strictly alternate between horizontal and
    vertical.
    """
    result = {}
    for edge_id, route in routes.items():
        count = route.segment_count
        edges = list(route.segment_edges) or [frozenset()] * count
        points = [route.points[0]]
        kept_edges: list[frozenset[int]] = []
        pending: frozenset[int] = frozenset()
        for index in range(count):
            start, end = route.points[index], route.points[index + 1]
            if abs(start.x - end.x) + abs(start.y - end.y) <= EPS:
                if kept_edges:
                    kept_edges[-1] |= edges[index]
                else:
                    pending |= edges[index]
                continue
            if len(points) >= 2 and _same_orientation(points[-2], points[-1], end):
                points[-1] = end
                kept_edges[-1] |= edges[index] | pending
            else:
                points.append(end)
                kept_edges.append(edges[index] | pending)
            pending = frozenset()
        result[edge_id] = Route(
            edge_id,
            tuple(points),
            tuple(kept_edges) if route.segment_edges else (),
        )
    return result


def routes_from_paths(
    graph: RoutingGraph, paths: Mapping[str, EdgePath]
) -> dict[str, Route]:
    """Turns routing graph paths into routes with joined collinear segments."""
    routes = {}
    for edge_id, path in paths.items():
        points = tuple(path.points(graph))
        edges = tuple(frozenset((edge,)) for edge in path.edge_ids(graph))
        routes[edge_id] = Route(edge_id, points, edges)
    return join_collinear(routes)
