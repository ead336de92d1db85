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

import json
from pathlib import Path
from typing import Any

import pytest

from ortholay.enums import InstanceFormat, PipelineMode
from ortholay.errors import InvalidArgument, ParseError
from ortholay.io import (
    HAS_MSGPACK,
    Instance,
    drawing_to_instance,
    dump_instance,
    load_instance,
    parse_instance,
    write_instance,
)
from ortholay.models import Box, Drawing, Point, Route

from .conftest import make_graph


def _document(**vertex_fields: Any) -> dict[str, Any]:
    vertices = [{"id": "a"}, {"id": "b"}]
    for key, values in vertex_fields.items():
        for vertex, value in zip(vertices, values):
            vertex[key] = value
    return {"vertices": vertices, "edges": [{"id": "e0", "source": "a", "target": "b"}]}


def _routed_document(path: list[list[float]]) -> dict[str, Any]:
    document = _document(
        box=[
            {"x": 0, "y": 0, "width": 40, "height": 38},
            {"x": 100, "y": 0, "width": 40, "height": 38},
        ]
    )
    document["edges"][0]["path"] = path
    return document


def test_plain_graph_is_laid_out_from_scratch() -> None:
    instance = parse_instance(json.dumps(_document(label=["A", None])))
    assert instance.mode is PipelineMode.FORCE
    assert instance.paths is None
    assert instance.graph.vertices["a"].label == "A"
    assert instance.graph.vertices["b"].label is None
    assert instance.config == {}


def test_positions_and_boxes() -> None:
    instance = parse_instance(_document(position=[[0, 0], [100, 0]]))
    assert instance.mode is PipelineMode.GIVEN_POSITIONS
    assert instance.positions == {"a": Point(0, 0), "b": Point(100, 0)}
    assert instance.boxes == {}

    instance = parse_instance(
        _document(
            box=[
                {"x": 0, "y": 0, "width": 40, "height": 38},
                {"x": 100, "y": 0, "width": 20, "height": 20},
            ]
        )
    )
    assert instance.boxes["b"] == Box(100, 0, 20, 20, 20, 20)


def test_given_routing() -> None:
    instance = parse_instance(_routed_document([[20, 0], [80, 0]]))
    assert instance.mode is PipelineMode.GIVEN_ROUTING
    assert instance.paths == {"e0": (Point(20, 0), Point(80, 0))}


@pytest.mark.parametrize(
    ("document", "location", "message"),
    [
        (_document(position=[[0, 0]]), "vertices[1].position", "missing position"),
        (
            _document(
                box=[
                    {"x": 0, "y": 0, "width": 40, "height": 38},
                    {"x": 100, "y": 0, "width": 40, "height": 38},
                ],
                position=[[0, 1], [100, 0]],
            ),
            "vertices[0].position",
            "differs from the box centre",
        ),
        (
            _document(
                box=[
                    {"x": 0, "y": 0, "width": 40, "height": 38},
                    {"x": 10, "y": 0, "width": 40, "height": 38},
                ]
            ),
            "vertices",
            "overlap",
        ),
        (
            {"vertices": [{"id": "a"}, {"id": "a"}], "edges": []},
            "vertices[1].id",
            "duplicate vertex id 'a'",
        ),
        (
            {"vertices": [{"id": "a"}], "edges": [{"id": "e0", "source": "a", "target": "z"}]},
            "edges[0].target",
            "unknown vertex id 'z'",
        ),
        (
            {
                "vertices": [{"id": "a"}],
                "edges": [
                    {"id": "e0", "source": "a", "target": "a"},
                    {"id": "e0", "source": "a", "target": "a"},
                ],
            },
            "edges[1].id",
            "duplicate edge id",
        ),
        (_routed_document([[20, 0], [50, 0], [90, 0]]), "edges[0].path[2]", "boundary"),
    ],
)
def test_errors_point_at_the_offending_field(
    document: dict[str, Any], location: str, message: str
) -> None:
    with pytest.raises(ParseError, match=message) as exc_info:
        parse_instance(document)
    assert exc_info.value.location == location
    assert str(exc_info.value).startswith(f"{location}: ")


def test_routing_needs_every_path_and_box() -> None:
    document = _routed_document([[20, 0], [80, 0]])
    document["edges"].append({"id": "e1", "source": "a", "target": "b"})
    with pytest.raises(ParseError) as exc_info:
        parse_instance(document)
    assert exc_info.value.location == "edges[1].path"

    document = _document(position=[[0, 0], [100, 0]])
    document["edges"][0]["path"] = [[20, 0], [80, 0]]
    with pytest.raises(ParseError, match="needs the boxes") as exc_info:
        parse_instance(document)
    assert exc_info.value.location == "vertices[0].box"


def test_invalid_json() -> None:
    with pytest.raises(ParseError, match="invalid JSON at line 1") as exc_info:
        parse_instance('{"vertices": [')
    assert exc_info.value.location == ""


def test_json_round_trip(tmp_path: Path, row_boxes: dict[str, Box]) -> None:
    boxes = {**row_boxes, "b": Box(100, 0, 60, 38, 40, 20)}
    instance = Instance(
        make_graph("ab", [("a", "b"), ("b", "b")], boxes=boxes),
        config={"delta_min": 8, "passes": "HV"},
    )
    assert parse_instance(dump_instance(instance)) == instance

    path = tmp_path / "instance.json"
    write_instance(instance, path)
    assert load_instance(path) == instance
    assert json.loads(path.read_text())["vertices"][1]["box"] == {
        "x": 100,
        "y": 0,
        "width": 60,
        "height": 38,
        "original_width": 40,
        "original_height": 20,
    }


def test_drawing_to_instance(row_boxes: dict[str, Box]) -> None:
    graph = make_graph("ab", [("a", "b")], boxes=row_boxes)
    drawing = Drawing(graph, row_boxes, {"e0": Route("e0", (Point(20, 0), Point(80, 0)))})
    instance = drawing_to_instance(drawing, config={"nudge": "constrained"})
    assert instance.mode is PipelineMode.GIVEN_ROUTING
    assert instance.positions == {}
    assert instance.boxes == row_boxes
    assert parse_instance(dump_instance(instance)) == instance


@pytest.mark.skipif(not HAS_MSGPACK, reason="msgpack isn't installed")
def test_msgpack_round_trip(tmp_path: Path) -> None:
    instance = Instance(make_graph("ab", [("a", "b")]))
    content = dump_instance(instance, instance_format=InstanceFormat.MSGPACK)
    assert isinstance(content, bytes)
    assert parse_instance(content, instance_format=InstanceFormat.MSGPACK) == instance

    path = tmp_path / "instance.msgpack"
    write_instance(instance, path)
    assert load_instance(path) == instance

    with pytest.raises(ParseError, match="invalid msgpack"):
        parse_instance(b"\xc1", instance_format=InstanceFormat.MSGPACK)


@pytest.mark.skipif(HAS_MSGPACK, reason="msgpack is installed")
def test_msgpack_needs_the_package() -> None:
    instance = Instance(make_graph("ab", [("a", "b")]))
    with pytest.raises(InvalidArgument, match="msgpack"):
        dump_instance(instance, instance_format=InstanceFormat.MSGPACK)
    with pytest.raises(ParseError, match="msgpack"):
        parse_instance(b"\x80", instance_format=InstanceFormat.MSGPACK)
