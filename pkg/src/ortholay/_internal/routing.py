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

import heapq
import itertools
import logging
from typing import Mapping, NamedTuple, Optional, Sequence

from .enums import Direction
from .errors import InvalidArgument, RoutingFailure
from .geometry import Point, polyline_length, simplify_polyline
from .graph import Multigraph
from .ports import Port, PortAssignment
from .routing_graph import RoutingGraph

__all__ = (
    "EdgePath",
    "route_edge",
    "shortest_route",
    "route_edges",
    "count_path_crossings",
    "path_crossings",
    "reduce_crossings",
)

_log = logging.getLogger(__name__)

#: Preference of the entry direction between equally good routes.
_DIRECTION_RANK = {
    Direction.EAST: 0,
    Direction.NORTH: 1,
    Direction.WEST: 2,
    Direction.SOUTH: 3,
}


class EdgePath(NamedTuple):
    """A routed edge, as a vertex sequence in the routing graph."""

    edge_id: str
    vertices: tuple[int, ...]

    def points(self, graph: RoutingGraph) -> list[Point]:
        return [graph.points[vertex] for vertex in self.vertices]

    def polyline(self, graph: RoutingGraph) -> list[Point]:
        """The path with collinear runs joined."""
        return simplify_polyline(self.points(graph))

    def length(self, graph: RoutingGraph) -> float:
        return polyline_length(self.points(graph))

    def bends(self, graph: RoutingGraph) -> int:
        return max(len(self.polyline(graph)) - 2, 0)

    def edge_ids(self, graph: RoutingGraph) -> list[int]:
        return [graph.edge_id(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def shortest_route(
    graph: RoutingGraph, source: int, target: int, *, edge_id: str = ""
) -> EdgePath:
    """
    Finds a shortest path with the fewest bends among all shortest paths.

    Dijkstra's algorithm runs on ``(vertex, entry direction)`` states with the
    cost ``(length, bends)``. Port vertices other than ``target`` are never
    entered.

    Raises:
        RoutingFailure: There is no path.
    """
    if source == target:
        return EdgePath(edge_id, (source,))

    State = tuple[int, Optional[Direction]]
    start: State = (source, None)
    best: dict[State, tuple[float, int]] = {start: (0.0, 0)}
    parent: dict[State, State] = {}
    counter = itertools.count()
    heap: list[tuple[float, int, int, int, int, State]] = [
        (0.0, 0, -1, source, next(counter), start)
    ]
    done: set[State] = set()
    while heap:
        length, bends, _, vertex, _, state = heapq.heappop(heap)
        if state in done:
            continue
        done.add(state)
        if vertex == target:
            vertices = [vertex]
            while state in parent:
                state = parent[state]
                vertices.append(state[0])
            vertices.reverse()
            return EdgePath(edge_id, tuple(vertices))

        entry = state[1]
        for direction, neighbour in sorted(
            graph.neighbours[vertex].items(), key=lambda item: _DIRECTION_RANK[item[0]]
        ):
            if entry is not None and direction is entry.opposite:
                continue
            if neighbour != target and graph.is_port(neighbour):
                continue
            next_state = (neighbour, direction)
            if next_state in done:
                continue
            step = graph.length(graph.edge_id(vertex, neighbour))
            cost = (
                round(length + step, 6),
                bends + (entry is not None and direction is not entry),
            )
            known = best.get(next_state)
            if known is not None and known <= cost:
                continue
            best[next_state] = cost
            parent[next_state] = state
            heapq.heappush(
                heap,
                (
                    cost[0],
                    cost[1],
                    _DIRECTION_RANK[direction],
                    neighbour,
                    next(counter),
                    next_state,
                ),
            )
    raise RoutingFailure(edge_id)


def route_edge(
    graph: RoutingGraph, source: Port, target: Port, *, edge_id: Optional[str] = None
) -> EdgePath:
    """
    Routes an edge between two of its ports.

    Raises:
        InvalidArgument: A port isn't a vertex of the routing graph.
        RoutingFailure: The ports are disconnected.
    """
    if edge_id is None:
        edge_id = source.edge_id
    try:
        source_vertex = graph.port_vertices[source.key]
        target_vertex = graph.port_vertices[target.key]
    except KeyError as exc:
        raise InvalidArgument(f"Port {exc.args[0]} is not in the routing graph.") from None
    return shortest_route(graph, source_vertex, target_vertex, edge_id=edge_id)


def route_edges(
    graph: Multigraph, routing_graph: RoutingGraph, ports: PortAssignment
) -> dict[str, EdgePath]:
    """Routes every edge of the graph, in the order of the edge ids."""
    paths = {}
    for edge_id in sorted(graph.edges):
        source, target = ports.endpoints(edge_id)
        paths[edge_id] = route_edge(routing_graph, source, target)
    return paths


class SharedRun(NamedTuple):
    # positions in the first path, and the first/last matching position in the other
    start: int
    end: int
    other_start: int
    other_end: int


def shared_runs(first: Sequence[int], second: Sequence[int]) -> list[SharedRun]:
    position = {vertex: index for index, vertex in enumerate(second)}
    runs = []
    i = 0
    while i < len(first):
        j = position.get(first[i])
        if j is None:
            i += 1
            continue
        step = 0
        if i + 1 < len(first):
            if j + 1 < len(second) and second[j + 1] == first[i + 1]:
                step = 1
            elif j >= 1 and second[j - 1] == first[i + 1]:
                step = -1
        k = 0
        if step:
            while (
                i + k + 1 < len(first)
                and 0 <= j + step * (k + 1) < len(second)
                and first[i + k + 1] == second[j + step * (k + 1)]
            ):
                k += 1
        runs.append(SharedRun(i, i + k, j, j + step * k))
        i += k + 1
    return runs


def _rank(graph: RoutingGraph, vertex: int, reference: Direction, neighbour: int) -> int:
    """Counterclockwise quarter turns from ``reference`` to the edge towards ``neighbour``."""
    return (graph.direction(vertex, neighbour).value - reference.value) % 4


def run_crosses(
    graph: RoutingGraph, first: Sequence[int], second: Sequence[int], run: SharedRun
) -> bool:
    i, k = run.start, run.end
    step = 1 if run.other_end >= run.other_start else -1
    before_first = run.other_start - step
    after_second = run.other_end + step
    if i == 0 or k == len(first) - 1:
        return False
    if not (0 <= before_first < len(second) and 0 <= after_second < len(second)):
        return False
    p_in, p_out = first[i - 1], first[k + 1]
    q_in, q_out = second[before_first], second[after_second]

    if i == k:
        x = first[i]
        a = sorted(
            (graph.direction(x, p_in).value, graph.direction(x, p_out).value)
        )
        inside = [
            a[0] < graph.direction(x, q).value < a[1] for q in (q_in, q_out)
        ]
        return inside[0] != inside[1]

    s, t = first[i], first[k]
    into_run = graph.direction(s, first[i + 1])
    back_into_run = graph.direction(t, first[k - 1])
    q_before_p_at_s = _rank(graph, s, into_run, q_in) < _rank(graph, s, into_run, p_in)
    p_before_q_at_t = _rank(graph, t, back_into_run, p_out) < _rank(
        graph, t, back_into_run, q_out
    )
    return q_before_p_at_s != p_before_q_at_t


def count_path_crossings(graph: RoutingGraph, first: EdgePath, second: EdgePath) -> int:
    """
    Counts the transversal crossings of two paths.

    Overlapping stretches count as one crossing when the paths leave them on
    different sides than they entered, and touching points count as none.
    """
    return sum(
        run_crosses(graph, first.vertices, second.vertices, run)
        for run in shared_runs(first.vertices, second.vertices)
    )


def path_crossings(
    graph: RoutingGraph, paths: Mapping[str, EdgePath]
) -> dict[tuple[str, str], int]:
    """Crossing counts of all path pairs that cross at least once."""
    result = {}
    vertex_sets = {edge_id: set(path.vertices) for edge_id, path in paths.items()}
    for a, b in itertools.combinations(sorted(paths), 2):
        if vertex_sets[a].isdisjoint(vertex_sets[b]):
            continue
        count = count_path_crossings(graph, paths[a], paths[b])
        if count:
            result[a, b] = count
    return result


def _rewrite(kept: EdgePath, rewritten: EdgePath) -> EdgePath:
    shared = set(kept.vertices)
    indices = [i for i, vertex in enumerate(rewritten.vertices) if vertex in shared]
    first, last = indices[0], indices[-1]
    kept_position = {vertex: index for index, vertex in enumerate(kept.vertices)}
    start, end = kept_position[rewritten.vertices[first]], kept_position[rewritten.vertices[last]]
    if start <= end:
        section = kept.vertices[start : end + 1]
    else:
        section = kept.vertices[end : start + 1][::-1]
    return rewritten._replace(
        vertices=rewritten.vertices[:first] + section + rewritten.vertices[last + 1 :]
    )


def reduce_crossings(
    graph: RoutingGraph,
    paths: Mapping[str, EdgePath],
    *,
    max_rewrites: Optional[int] = None,
) -> dict[str, EdgePath]:
    """
    Makes every pair of paths cross at most once.

    When two paths cross more than once, the path with the larger edge id
    takes over the other path's section between their first and last shared
    vertex. Pairs are examined in edge id order; after a rewrite all pairs
    with the rewritten path are examined again.

    Parameters:
        graph: The routing graph of the paths.
        paths: The paths, keyed by edge id.
        max_rewrites:
            Upper bound on the number of rewrites. When it is hit, a warning
            is logged and the current paths are returned.
    """
    result = dict(paths)
    ids = sorted(result)
    if max_rewrites is None:
        max_rewrites = 10 * len(ids) * len(ids) + 10

    heap = list(itertools.combinations(ids, 2))
    heapq.heapify(heap)
    queued = set(heap)
    rewrites = 0
    while heap:
        pair = heapq.heappop(heap)
        queued.discard(pair)
        first, second = pair
        if set(result[first].vertices).isdisjoint(result[second].vertices):
            continue
        if count_path_crossings(graph, result[first], result[second]) <= 1:
            continue
        if rewrites >= max_rewrites:
            _log.warning(
                "Crossing reduction stopped after %d rewrites, some paths"
                " may still cross more than once.",
                rewrites,
            )
            break
        result[second] = _rewrite(result[first], result[second])
        rewrites += 1
        for other in ids:
            if other == second:
                continue
            again = (min(other, second), max(other, second))
            if again not in queued:
                queued.add(again)
                heapq.heappush(heap, again)
    _log.debug("Crossing reduction rewrote %d paths.", rewrites)
    return result
