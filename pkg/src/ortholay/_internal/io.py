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

import json
import logging
import os
from typing import TYPE_CHECKING, Any, Mapping, Optional, Union, final

try:
    import msgpack
except ImportError:
    HAS_MSGPACK = False
else:
    HAS_MSGPACK = True

from .enums import InstanceFormat, PipelineMode
from .errors import InvalidArgument, ParseError
from .geometry import Box, Point
from .graph import Edge, Multigraph, Vertex
from .layout import overlapping_pairs
from .models import InstanceData
from .models.bases import format_location

if TYPE_CHECKING:
    from .drawing import Drawing

__all__ = (
    "HAS_MSGPACK",
    "Instance",
    "format_for_path",
    "parse_instance",
    "load_instance",
    "dump_instance",
    "write_instance",
    "instance_to_record",
    "drawing_to_instance",
)

_log = logging.getLogger(__name__)

Document = Union[str, bytes, Mapping[str, Any]]

_MSGPACK_SUFFIXES = (".msgpack", ".mpk")


@final
class Instance:
    """
    Instance(graph, *, paths=None, config=None)

    A graph to lay out, with the geometry supplied for it.

    Boxes and positions are carried by the graph's vertices.

    Attributes:
        graph: The graph.
        paths: The routed path of every edge, if the routing is given.
        config: The ``config`` block of the document.
    """

    __slots__ = ("graph", "paths", "config")

    def __init__(
        self,
        graph: Multigraph,
        *,
        paths: Optional[Mapping[str, tuple[Point, ...]]] = None,
        config: Optional[Mapping[str, Any]] = None,
    ) -> None:
        self.graph = graph
        self.paths = None if paths is None else dict(paths)
        self.config: dict[str, Any] = dict(config or {})

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} mode={self.mode.value} graph={self.graph!r}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            list(self.graph.vertices.values()) == list(other.graph.vertices.values())
            and list(self.graph.edges.values()) == list(other.graph.edges.values())
            and self.paths == other.paths
            and self.config == other.config
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def boxes(self) -> dict[str, Box]:
        return {
            vertex.id: vertex.box
            for vertex in self.graph.vertices.values()
            if vertex.box is not None
        }

    @property
    def positions(self) -> dict[str, Point]:
        return {
            vertex.id: vertex.position
            for vertex in self.graph.vertices.values()
            if vertex.position is not None
        }

    @property
    def mode(self) -> PipelineMode:
        """The most complete pipeline mode the supplied geometry allows."""
        if self.paths is not None:
            return PipelineMode.GIVEN_ROUTING
        if self.boxes or self.positions:
            return PipelineMode.GIVEN_POSITIONS
        return PipelineMode.FORCE


def format_for_path(path: Union[str, os.PathLike[str]]) -> InstanceFormat:
    """The document format implied by a file name."""
    if os.fspath(path).lower().endswith(_MSGPACK_SUFFIXES):
        return InstanceFormat.MSGPACK
    return InstanceFormat.JSON


def _decode(document: Union[str, bytes], instance_format: InstanceFormat) -> Any:
    if instance_format is InstanceFormat.MSGPACK:
        if not HAS_MSGPACK:
            raise ParseError("msgpack documents need the optional msgpack package")
        if isinstance(document, str):
            raise ParseError("msgpack documents have to be bytes")
        try:
            return msgpack.unpackb(document, raw=False)
        except ValueError as exc:
            raise ParseError(f"invalid msgpack document: {exc}") from None
    try:
        return json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    except UnicodeDecodeError:
        raise ParseError("the document isn't valid UTF-8") from None


def _validate_geometry(data: InstanceData) -> None:
    with_geometry = [
        vertex for vertex in data.vertices if vertex.box is not None or vertex.position is not None
    ]
    if with_geometry and len(with_geometry) != len(data.vertices):
        index = next(
            index
            for index, vertex in enumerate(data.vertices)
            if vertex.box is None and vertex.position is None
        )
        raise ParseError(
            "missing position (either all vertices or none have one)",
            location=format_location("vertices", index, "position"),
        )
    for index, vertex in enumerate(data.vertices):
        if vertex.box is not None and vertex.position is not None:
            offset = abs(vertex.box.cx - vertex.position.x) + abs(vertex.box.cy - vertex.position.y)
            if offset > 1e-9:
                raise ParseError(
                    "position differs from the box centre",
                    location=format_location("vertices", index, "position"),
                )
    boxes = {vertex.id: vertex.box for vertex in data.vertices if vertex.box is not None}
    overlaps = overlapping_pairs(boxes)
    if overlaps:
        first, second = overlaps[0]
        raise ParseError(f"boxes of {first!r} and {second!r} overlap", location="vertices")


def _validate_paths(data: InstanceData) -> None:
    routed = [edge for edge in data.edges if edge.path is not None]
    if not routed:
        return
    for index, edge in enumerate(data.edges):
        if edge.path is None:
            raise ParseError(
                "missing path (either all edges or none have one)",
                location=format_location("edges", index, "path"),
            )
    boxes = {}
    for index, vertex in enumerate(data.vertices):
        if vertex.box is None:
            raise ParseError(
                "a given routing needs the boxes of all vertices",
                location=format_location("vertices", index, "box"),
            )
        boxes[vertex.id] = vertex.box
    for index, edge in enumerate(data.edges):
        assert edge.path is not None
        last = len(edge.path) - 1
        for point_index, vertex_id in ((0, edge.source), (last, edge.target)):
            if boxes[vertex_id].side_of(edge.path[point_index]) is None:
                raise ParseError(
                    f"path end point isn't on the boundary of the box of {vertex_id!r}",
                    location=format_location("edges", index, "path", point_index),
                )


def _graph_from_data(data: InstanceData) -> Multigraph:
    vertex_ids: dict[str, int] = {}
    for index, vertex in enumerate(data.vertices):
        if vertex.id in vertex_ids:
            raise ParseError(
                f"duplicate vertex id {vertex.id!r}",
                location=format_location("vertices", index, "id"),
            )
        vertex_ids[vertex.id] = index
    edge_ids: set[str] = set()
    for index, edge in enumerate(data.edges):
        if edge.id in edge_ids:
            raise ParseError(
                f"duplicate edge id {edge.id!r}", location=format_location("edges", index, "id")
            )
        edge_ids.add(edge.id)
        for key, vertex_id in (("source", edge.source), ("target", edge.target)):
            if vertex_id not in vertex_ids:
                raise ParseError(
                    f"unknown vertex id {vertex_id!r}",
                    location=format_location("edges", index, key),
                )
    return Multigraph(
        (Vertex(v.id, v.label, v.box, v.position) for v in data.vertices),
        (Edge(e.id, e.source, e.target) for e in data.edges),
    )


def parse_instance(
    document: Document, *, instance_format: InstanceFormat = InstanceFormat.JSON
) -> Instance:
    """
    Parses an instance document.

    The document has a ``vertices`` list (``id``, optional ``label``,
    ``box`` and ``position``), an ``edges`` list (``id``, ``source``,
    ``target``, optional ``path``) and an optional ``config`` object.
    Either all vertices or none have a box or position, and either all
    edges or none have a path.

    Parameters:
        document: The encoded document or its already decoded contents.
        instance_format: The encoding of ``document`` when it's encoded.

    Raises:
        ParseError: The document is malformed. The error's ``location``
            points at the offending field, e.g. ``edges[3].source``.
    """
    raw = document if isinstance(document, Mapping) else _decode(document, instance_format)
    data = InstanceData(raw)
    graph = _graph_from_data(data)
    _validate_geometry(data)
    _validate_paths(data)
    paths = None
    if data.edges and data.edges[0].path is not None:
        paths = {edge.id: edge.path for edge in data.edges if edge.path is not None}
    instance = Instance(graph, paths=paths, config=data.config)
    _log.debug("Parsed %r.", instance)
    return instance


def load_instance(
    path: Union[str, os.PathLike[str]], *, instance_format: Optional[InstanceFormat] = None
) -> Instance:
    """Reads an instance file, choosing the format by suffix unless one is given."""
    if instance_format is None:
        instance_format = format_for_path(path)
    with open(path, "rb") as fp:
        content = fp.read()
    return parse_instance(content, instance_format=instance_format)


def _box_record(box: Box) -> dict[str, float]:
    record = {"x": box.cx, "y": box.cy, "width": box.width, "height": box.height}
    if box.original_width != box.width:
        record["original_width"] = box.original_width
    if box.original_height != box.height:
        record["original_height"] = box.original_height
    return record


def instance_to_record(instance: Instance) -> dict[str, Any]:
    """The decoded document of an instance."""
    vertices = []
    for vertex in instance.graph.vertices.values():
        record: dict[str, Any] = {"id": vertex.id}
        if vertex.label is not None:
            record["label"] = vertex.label
        if vertex.box is not None:
            record["box"] = _box_record(vertex.box)
        if vertex.position is not None:
            record["position"] = [vertex.position.x, vertex.position.y]
        vertices.append(record)
    edges = []
    for edge in instance.graph.edges.values():
        record = {"id": edge.id, "source": edge.source, "target": edge.target}
        if instance.paths is not None:
            record["path"] = [[point.x, point.y] for point in instance.paths[edge.id]]
        edges.append(record)
    document: dict[str, Any] = {"vertices": vertices, "edges": edges}
    if instance.config:
        document["config"] = dict(instance.config)
    return document


def dump_instance(
    instance: Instance, *, instance_format: InstanceFormat = InstanceFormat.JSON
) -> Union[str, bytes]:
    """
    Encodes an instance as a document.

    ``parse_instance()`` reads the result back into an equal instance.

    Raises:
        InvalidArgument: msgpack is requested but not installed.
    """
    document = instance_to_record(instance)
    if instance_format is InstanceFormat.MSGPACK:
        if not HAS_MSGPACK:
            raise InvalidArgument("msgpack documents need the optional msgpack package.")
        return msgpack.packb(document, use_bin_type=True)
    return json.dumps(document, indent=2)


def write_instance(
    instance: Instance,
    path: Union[str, os.PathLike[str]],
    *,
    instance_format: Optional[InstanceFormat] = None,
) -> None:
    if instance_format is None:
        instance_format = format_for_path(path)
    content = dump_instance(instance, instance_format=instance_format)
    if isinstance(content, str):
        content = content.encode()
    with open(path, "wb") as fp:
        fp.write(content)


def drawing_to_instance(
    drawing: Drawing, *, config: Optional[Mapping[str, Any]] = None
) -> Instance:
    """Turns a drawing into an instance with its boxes and routes given."""
    graph = Multigraph(
        (
            Vertex(vertex.id, vertex.label, drawing.boxes[vertex.id], None)
            for vertex in drawing.graph.vertices.values()
        ),
        drawing.graph.edges.values(),
    )
    paths = {edge_id: tuple(drawing.routes[edge_id].points) for edge_id in drawing.graph.edges}
    return Instance(graph, paths=paths, config=config)
