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

from typing import Optional

import numpy as np
import pytest

from ortholay.models import Box, Edge, Multigraph, Point, Vertex
from ortholay.routing import EdgePath, RoutingGraph


def make_box(cx: float, cy: float, width: float, height: float) -> Box:
    return Box(cx, cy, width, height, width, height)


def make_graph(
    vertex_ids: str, edges: list[tuple[str, str]], *, boxes: Optional[dict[str, Box]] = None
) -> Multigraph:
    """A graph on single-letter vertex ids with edges ``e0``, ``e1``, ..."""
    boxes = boxes or {}
    return Multigraph(
        (
            Vertex(
                vertex_id,
                None,
                boxes.get(vertex_id),
                boxes[vertex_id].center if vertex_id in boxes else None,
            )
            for vertex_id in vertex_ids
        ),
        (Edge(f"e{index}", source, target) for index, (source, target) in enumerate(edges)),
    )


def grid_boxes(vertex_ids: list[str], seed: int, *, columns: int = 3) -> dict[str, Box]:
    """Boxes of random width on a grid with room for routing between them."""
    rng = np.random.default_rng(seed)
    return {
        vertex_id: make_box(
            (index % columns) * 140.0 + float(rng.uniform(-10, 10)),
            (index // columns) * 110.0 + float(rng.uniform(-10, 10)),
            float(rng.uniform(20, 70)),
            38,
        )
        for index, vertex_id in enumerate(vertex_ids)
    }


class Grid:
    """A routing graph on the integer grid, with some edges left out."""

    def __init__(
        self,
        width: int,
        height: int,
        *,
        missing: frozenset[tuple[Point, Point]] = frozenset(),
        ports: Optional[dict[tuple[str, int], Point]] = None,
    ) -> None:
        self.points = [Point(x, y) for y in range(height) for x in range(width)]
        self.index = {point: i for i, point in enumerate(self.points)}
        edges = []
        for point in self.points:
            for neighbour in (Point(point.x + 1, point.y), Point(point.x, point.y + 1)):
                if neighbour in self.index and (point, neighbour) not in missing:
                    edges.append((self.index[point], self.index[neighbour]))
        self.graph = RoutingGraph(
            self.points, edges, {key: self.index[point] for key, point in (ports or {}).items()}
        )

    def vertex(self, x: int, y: int) -> int:
        return self.index[Point(x, y)]

    def edge(self, a: tuple[int, int], b: tuple[int, int]) -> int:
        return self.graph.edge_id(self.vertex(*a), self.vertex(*b))

    def path(self, edge_id: str, *points: tuple[int, int]) -> EdgePath:
        return EdgePath(edge_id, tuple(self.vertex(*point) for point in points))

    def coordinates(self, path: EdgePath) -> list[tuple[float, float]]:
        return [tuple(point) for point in path.points(self.graph)]


@pytest.fixture
def pair_graph() -> Multigraph:
    return make_graph("ab", [("a", "b")])


@pytest.fixture
def triangle_graph() -> Multigraph:
    return make_graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def row_boxes() -> dict[str, Box]:
    """Two 40x38 boxes side by side with a 60 px gap."""
    return {"a": make_box(0, 0, 40, 38), "b": make_box(100, 0, 40, 38)}
