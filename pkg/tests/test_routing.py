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

import itertools

import networkx as nx
import numpy as np
import pytest

from ortholay.enums import Side
from ortholay.errors import InvalidArgument, RoutingFailure
from ortholay.io import generate_random_multigraph
from ortholay.layout import Port, assign_ports
from ortholay.models import Box, Multigraph, Point
from ortholay.routing import (
    EdgePath,
    construct_routing_graph,
    count_path_crossings,
    path_crossings,
    reduce_crossings,
    route_edge,
    route_edges,
    shortest_route,
)

from .conftest import Grid, grid_boxes


def test_shortest_route_prefers_fewer_bends() -> None:
    grid = Grid(3, 3)
    path = shortest_route(grid.graph, grid.index[Point(0, 0)], grid.index[Point(2, 2)])
    assert path.length(grid.graph) == 4
    assert path.bends(grid.graph) == 1
    assert path.is_simple()


def test_shortest_route_does_not_pass_through_ports() -> None:
    grid = Grid(3, 3, ports={("e", 0): Point(0, 0), ("e", 1): Point(2, 2), ("f", 0): Point(1, 0)})
    path = shortest_route(grid.graph, grid.index[Point(0, 0)], grid.index[Point(2, 2)])
    assert grid.coordinates(path) == [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)]


def test_shortest_route_to_itself() -> None:
    grid = Grid(2, 1)
    assert shortest_route(grid.graph, 0, 0, edge_id="e").vertices == (0,)


def test_disconnected_ports() -> None:
    grid = Grid(2, 1, missing=frozenset({(Point(0, 0), Point(1, 0))}))
    with pytest.raises(RoutingFailure) as exc_info:
        shortest_route(grid.graph, 0, 1, edge_id="e7")
    assert exc_info.value.edge_id == "e7"


def _oracle(grid: Grid, source: int, target: int) -> tuple[float, int]:
    return min(
        (path.length(grid.graph), path.bends(grid.graph))
        for path in (
            EdgePath("", tuple(vertices))
            for vertices in nx.all_simple_paths(grid.graph.to_networkx(), source, target)
        )
    )


@pytest.mark.parametrize("seed", range(8))
def test_shortest_route_matches_exhaustive_search(seed: int) -> None:
    rng = np.random.default_rng(seed)
    full = Grid(4, 4)
    missing = frozenset(
        (full.points[a], full.points[b])
        for a, b in full.graph.edges
        if rng.random() < 0.25
    )
    grid = Grid(4, 4, missing=missing)
    source, target = (int(value) for value in rng.choice(len(grid.points), 2, replace=False))
    if not nx.has_path(grid.graph.to_networkx(), source, target):
        with pytest.raises(RoutingFailure):
            shortest_route(grid.graph, source, target)
        return
    path = shortest_route(grid.graph, source, target)
    assert path.vertices[0] == source and path.vertices[-1] == target
    assert (path.length(grid.graph), path.bends(grid.graph)) == _oracle(grid, source, target)
    path.edge_ids(grid.graph)


def test_route_edge_needs_ports_in_the_graph() -> None:
    grid = Grid(2, 1, ports={("e", 0): Point(0, 0)})
    source = Port("e", 0, "a", Side.EAST, Point(0, 0))
    target = Port("e", 1, "b", Side.WEST, Point(1, 0))
    with pytest.raises(InvalidArgument, match="not in the routing graph"):
        route_edge(grid.graph, source, target)


def test_route_edges(pair_graph: Multigraph, row_boxes: dict[str, Box]) -> None:
    ports = assign_ports(pair_graph, row_boxes)
    routing_graph = construct_routing_graph(pair_graph, row_boxes, ports, delta_min=12)
    paths = route_edges(pair_graph, routing_graph, ports)
    assert list(paths) == ["e0"]
    assert paths["e0"].polyline(routing_graph) == [Point(20, 0), Point(80, 0)]
    assert paths["e0"].length(routing_graph) == 60
    assert paths["e0"].bends(routing_graph) == 0


def test_transversal_crossing_at_a_vertex() -> None:
    grid = Grid(3, 3)
    horizontal = grid.path("a", (0, 1), (1, 1), (2, 1))
    vertical = grid.path("b", (1, 0), (1, 1), (1, 2))
    assert count_path_crossings(grid.graph, horizontal, vertical) == 1
    assert count_path_crossings(grid.graph, vertical, horizontal) == 1


def test_shared_stretches() -> None:
    grid = Grid(4, 3)
    straight = grid.path("a", (0, 1), (1, 1), (2, 1), (3, 1))
    touching = grid.path("b", (1, 0), (1, 1), (2, 1), (2, 0))
    crossing = grid.path("c", (1, 0), (1, 1), (2, 1), (2, 2))
    ending = grid.path("d", (1, 2), (1, 1), (0, 1))
    assert count_path_crossings(grid.graph, straight, touching) == 0
    assert count_path_crossings(grid.graph, straight, crossing) == 1
    assert count_path_crossings(grid.graph, straight, ending) == 0
    assert path_crossings(
        grid.graph, {"a": straight, "b": touching, "c": crossing, "d": ending}
    ) == {("a", "c"): 1}


def test_reduce_crossings_rewrites_the_later_path() -> None:
    grid = Grid(4, 3)
    straight = grid.path("a", (0, 1), (1, 1), (2, 1), (3, 1))
    detour = grid.path("b", (1, 0), (1, 1), (1, 2), (2, 2), (2, 1), (2, 0))
    assert count_path_crossings(grid.graph, straight, detour) == 2

    result = reduce_crossings(grid.graph, {"a": straight, "b": detour})
    assert result["a"] == straight
    assert grid.coordinates(result["b"]) == [(1, 0), (1, 1), (2, 1), (2, 0)]
    assert count_path_crossings(grid.graph, result["a"], result["b"]) == 0
    result["b"].edge_ids(grid.graph)


def test_reduce_crossings_keeps_single_crossings() -> None:
    grid = Grid(3, 3)
    paths = {
        "a": grid.path("a", (0, 1), (1, 1), (2, 1)),
        "b": grid.path("b", (1, 0), (1, 1), (1, 2)),
    }
    assert reduce_crossings(grid.graph, paths) == paths


@pytest.mark.parametrize("seed", range(6))
def test_reduced_paths_cross_at_most_once(seed: int) -> None:
    graph = generate_random_multigraph(9, 4, seed=seed)
    boxes = grid_boxes(list(graph.vertices), seed)
    ports = assign_ports(graph, boxes)
    routing_graph = construct_routing_graph(graph, boxes, ports, delta_min=12)
    paths = route_edges(graph, routing_graph, ports)

    result = reduce_crossings(routing_graph, paths)
    assert set(result) == set(paths)
    for a, b in itertools.combinations(sorted(result), 2):
        assert count_path_crossings(routing_graph, result[a], result[b]) <= 1
    for edge_id, path in result.items():
        assert path.vertices[0] == paths[edge_id].vertices[0]
        assert path.vertices[-1] == paths[edge_id].vertices[-1]
