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

import pytest

from ortholay.errors import ParseError
from ortholay.models import Box, EdgeData, InstanceData, Point, VertexData


def test_vertex_record() -> None:
    record = VertexData(
        {"id": "a", "label": "Alpha", "box": {"x": 1, "y": 2, "width": 10, "height": 4}},
        location="vertices[0]",
    )
    assert record.id == "a"
    assert record.label == "Alpha"
    assert record.box == Box(1, 2, 10, 4, 10, 4)
    assert record.position is None


def test_box_record_keeps_original_size() -> None:
    record = VertexData(
        {
            "id": "a",
            "box": {"x": 0, "y": 0, "width": 20, "height": 8, "original_width": 12},
            "position": [0, 0],
        }
    )
    assert record.box == Box(0, 0, 20, 8, 12, 8)
    assert record.position == Point(0, 0)


@pytest.mark.parametrize(
    "raw, location, message",
    [
        ({"label": "x"}, "vertices[2].id", "missing required field"),
        ({"id": ""}, "vertices[2].id", "expected a non-empty string"),
        ({"id": 5}, "vertices[2].id", "expected a non-empty string"),
        ({"id": "a", "label": 3}, "vertices[2].label", "expected a string"),
        ({"id": "a", "position": [1]}, "vertices[2].position", "expected a point"),
        ({"id": "a", "position": [1, "y"]}, "vertices[2].position[1]", "expected a number"),
        (
            {"id": "a", "box": {"x": 0, "y": 0, "width": 0, "height": 1}},
            "vertices[2].box.width",
            "expected a positive size",
        ),
        (
            {"id": "a", "box": {"x": 0, "y": 0, "width": 1}},
            "vertices[2].box.height",
            "missing required field",
        ),
        (
            {"id": "a", "box": {"x": float("nan"), "y": 0, "width": 1, "height": 1}},
            "vertices[2].box.x",
            "expected a finite number",
        ),
        ("a", "vertices[2]", "expected an object"),
    ],
)
def test_vertex_record_errors(raw: object, location: str, message: str) -> None:
    with pytest.raises(ParseError, match=message) as exc_info:
        VertexData(raw, location="vertices[2]")
    assert exc_info.value.location == location
    assert str(exc_info.value).startswith(f"{location}: ")


def test_edge_path() -> None:
    record = EdgeData({"id": "e", "source": "a", "target": "b", "path": [[0, 0], [0, 5], [3, 5]]})
    assert record.path == (Point(0, 0), Point(0, 5), Point(3, 5))


@pytest.mark.parametrize(
    "path, location, message",
    [
        ([[0, 0]], "edges[1].path", "at least two points"),
        ("zigzag", "edges[1].path", "at least two points"),
        ([[0, 0], [0, 5], [3, 6]], "edges[1].path[2]", "non-orthogonal path segment"),
        ([[0, 0], [0, 5], {"x": 1}], "edges[1].path[2]", "expected a point"),
    ],
)
def test_edge_path_errors(path: object, location: str, message: str) -> None:
    with pytest.raises(ParseError, match=message) as exc_info:
        EdgeData({"id": "e", "source": "a", "target": "b", "path": path}, location="edges[1]")
    assert exc_info.value.location == location


def test_instance_defaults() -> None:
    record = InstanceData({"vertices": [{"id": "a"}]})
    assert [vertex.id for vertex in record.vertices] == ["a"]
    assert record.edges == []
    assert record.config == {}


def test_instance_errors() -> None:
    with pytest.raises(ParseError) as exc_info:
        InstanceData({"edges": []})
    assert exc_info.value.location == "vertices"
    with pytest.raises(ParseError) as exc_info:
        InstanceData({"vertices": [], "edges": [{"id": "e", "source": "a"}]})
    assert exc_info.value.location == "edges[0].target"
    with pytest.raises(ParseError) as exc_info:
        InstanceData({"vertices": [], "config": []})
    assert exc_info.value.location == "config"
