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

"""Graphs"""

from __future__ import annotations

import logging
from typing import Iterable, Mapping, NamedTuple, Optional, final

import networkx as nx

from .errors import InvalidArgument
from .geometry import Box, Point

__all__ = ("Vertex", "Edge", "Multigraph")

_log = logging.getLogger(__name__)


class Vertex(NamedTuple):
    """A vertex with its optional label, box and position."""

    id: str
    label: Optional[str] = None
    box: Optional[Box] = None
    position: Optional[Point] = None


class Edge(NamedTuple):
    """An edge. ``source`` and ``target`` may be equal (a self-loop)."""

    id: str
    source: str
    target: str

    @property
    def is_self_loop(self) -> bool:
        return self.source == self.target

    def endpoint(self, index: int) -> str:
        return self.source if index == 0 else self.target

    def other(self, vertex_id: str) -> str:
        return self.target if vertex_id == self.source else self.source


@final
class Multigraph:
    """
    Multigraph(vertices=(), edges=())

    An undirected multigraph whose edges may be parallel or self-loops.

    Vertices and edges keep the order in which they were given.

    Raises:
        InvalidArgument:
            When an id is used twice or an edge references an unknown vertex.
    """

    __slots__ = ("_vertices", "_edges", "_degrees")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[Edge] = ()) -> None:
        self._vertices: dict[str, Vertex] = {}
        for vertex in vertices:
            if vertex.id in self._vertices:
                raise InvalidArgument(f"Duplicate vertex id {vertex.id!r}.")
            self._vertices[vertex.id] = vertex

        self._edges: dict[str, Edge] = {}
        self._degrees: dict[str, int] = dict.fromkeys(self._vertices, 0)
        for edge in edges:
            if edge.id in self._edges:
                raise InvalidArgument(f"Duplicate edge id {edge.id!r}.")
            for endpoint in (edge.source, edge.target):
                if endpoint not in self._vertices:
                    raise InvalidArgument(
                        f"Edge {edge.id!r} references unknown vertex {endpoint!r}."
                    )
                self._degrees[endpoint] += 1
            self._edges[edge.id] = edge

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} n={self.n} m={self.m}>"

    @property
    def vertices(self) -> Mapping[str, Vertex]:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, Edge]:
        return self._edges

    @property
    def n(self) -> int:
        """The number of vertices."""
        return len(self._vertices)

    @property
    def m(self) -> int:
        """The number of edges."""
        return len(self._edges)

    def degree(self, vertex_id: str) -> int:
        """The number of edge endpoints at the vertex, self-loops count twice."""
        return self._degrees[vertex_id]

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for edge in self._edges.values():
            graph.add_edge(edge.source, edge.target, key=edge.id)
        return graph

    def is_connected(self) -> bool:
        if not self._vertices:
            return False
        return nx.is_connected(self.to_networkx())

    def subgraph(self, vertex_ids: Iterable[str]) -> Multigraph:
        """The induced subgraph, keeping the original order."""
        keep = set(vertex_ids)
        return Multigraph(
            (vertex for vertex in self._vertices.values() if vertex.id in keep),
            (
                edge
                for edge in self._edges.values()
                if edge.source in keep and edge.target in keep
            ),
        )

    def largest_component(self) -> Multigraph:
        """
        Returns the largest connected component.

        Ties are broken in favour of the component containing the smallest
        vertex id. The graph itself is returned when it is connected.
        """
        if not self._vertices:
            return self
        components = list(nx.connected_components(self.to_networkx()))
        if len(components) == 1:
            return self
        best = min(components, key=lambda component: (-len(component), min(component)))
        dropped = sorted(set(self._vertices) - best)
        _log.warning(
            "Input graph has %d components, keeping the largest one"
            " (%d of %d vertices). Dropped vertices: %s",
            len(components),
            len(best),
            self.n,
            ", ".join(dropped),
        )
        return self.subgraph(best)

    def with_boxes(self, boxes: Mapping[str, Box]) -> Multigraph:
        """Returns a copy with the given boxes and box centres as positions."""
        return Multigraph(
            (
                vertex._replace(box=boxes[vertex.id], position=boxes[vertex.id].center)
                if vertex.id in boxes
                else vertex
                for vertex in self._vertices.values()
            ),
            self._edges.values(),
        )

    def with_positions(self, positions: Mapping[str, Point]) -> Multigraph:
        return Multigraph(
            (
                vertex._replace(position=positions[vertex.id])
                if vertex.id in positions
                else vertex
                for vertex in self._vertices.values()
            ),
            self._edges.values(),
        )
