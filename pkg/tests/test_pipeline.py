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

from ortholay import PipelineConfig, run_pipeline
from ortholay.enums import Axis, NudgeMode, PipelineMode
from ortholay.errors import InvalidArgument, ParseError
from ortholay.io import (
    Instance,
    drawing_to_instance,
    generate_random_multigraph,
    parse_instance,
)
from ortholay.layout import overlapping_pairs
from ortholay.models import Box

from .conftest import grid_boxes, make_box, make_graph

ROUTING_STAGES = {
    "port assignment",
    "routing graph",
    "edge routing",
    "crossing reduction",
    "edge ordering",
    "edge nudging",
    "metrics",
}


def test_config_defaults() -> None:
    config = PipelineConfig()
    assert config.mode is None
    assert config.delta_min == 12
    assert config.nudge_mode is NudgeMode.FULL
    assert config.passes == (Axis.X, Axis.Y, Axis.X)
    assert config.layout.seed == 0


@pytest.mark.parametrize(
    ("passes", "expected"),
    [("HVH", (Axis.X, Axis.Y, Axis.X)), ("v,h", (Axis.Y, Axis.X)), (["H"], (Axis.X,))],
)
def test_schedules(passes: str, expected: tuple[Axis, ...]) -> None:
    assert PipelineConfig(passes=passes).passes == expected


@pytest.mark.parametrize(
    "kwargs",
    [
        {"passes": ""},
        {"passes": "HX"},
        {"delta_min": -1},
        {"delta_min": float("inf")},
        {"per_char_width": -1},
        {"min_port_gap": 0},
    ],
)
def test_invalid_config(kwargs: dict[str, object]) -> None:
    with pytest.raises(InvalidArgument):
        PipelineConfig(**kwargs)  # type: ignore[arg-type]


def test_seed_is_carried_into_the_layout() -> None:
    config = PipelineConfig(seed=4)
    assert config.layout.seed == 4
    assert config.replace(seed=9).layout.seed == 9


def test_config_from_dict() -> None:
    config = PipelineConfig.from_dict(
        {"delta_min": 8, "nudge": "constrained", "iterations": 10, "passes": "VH", "seed": 2},
        seed=5,
        delta_min=None,
    )
    assert config.delta_min == 8
    assert config.nudge_mode is NudgeMode.CONSTRAINED
    assert config.passes == (Axis.Y, Axis.X)
    assert config.layout.iterations == 10
    assert config.seed == 5
    assert config.layout.seed == 5
    assert PipelineConfig.from_dict({"mode": "force"}).mode is PipelineMode.FORCE


@pytest.mark.parametrize(
    ("data", "location"),
    [
        ({"bogus": 1}, "config.bogus"),
        ({"delta_min": "wide"}, "config.delta_min"),
        ({"nudge": "sideways"}, "config.nudge"),
        ({"delta_min": -3}, "config"),
    ],
)
def test_config_from_dict_errors(data: dict[str, object], location: str) -> None:
    with pytest.raises(ParseError) as exc_info:
        PipelineConfig.from_dict(data)
    assert exc_info.value.location == location


def test_given_positions(row_boxes: dict[str, Box]) -> None:
    instance = Instance(make_graph("ab", [("a", "b")], boxes=row_boxes))
    result = run_pipeline(instance)
    assert set(result.timings) == ROUTING_STAGES
    assert result.total_time == pytest.approx(sum(result.timings.values()))
    assert result.metrics.crossings == 0
    assert result.metrics.bends == 0
    route = result.drawing.routes["e0"]
    assert route.points[0].y == pytest.approx(route.points[-1].y)
    assert result.drawing.boxes["a"].right == pytest.approx(route.points[0].x)
    assert result.drawing.boxes["b"].left == pytest.approx(route.points[-1].x)


def test_overlapping_positions_are_separated(caplog: pytest.LogCaptureFixture) -> None:
    boxes = {"a": make_box(0, 0, 40, 38), "b": make_box(10, 0, 40, 38)}
    instance = Instance(make_graph("ab", [("a", "b")], boxes=boxes))
    result = run_pipeline(instance, PipelineConfig(nudge_mode=NudgeMode.CONSTRAINED))
    assert "overlap removal" in result.timings
    assert "removing the overlaps" in caplog.text
    assert overlapping_pairs(result.drawing.boxes) == []


@pytest.mark.parametrize("seed", range(3))
def test_force_layout_of_a_random_graph(seed: int) -> None:
    graph = generate_random_multigraph(8, 3, seed=seed)
    result = run_pipeline(Instance(graph), PipelineConfig(seed=seed))
    drawing = result.drawing
    assert set(result.timings) == ROUTING_STAGES | {"force-directed", "overlap removal"}
    assert set(drawing.routes) == set(graph.edges)
    assert overlapping_pairs(drawing.boxes) == []
    for edge in graph.edges.values():
        route = drawing.routes[edge.id]
        for index in range(route.segment_count):
            route.orientation(index)
        assert drawing.boxes[edge.source].side_of(route.points[0]) is not None
        assert drawing.boxes[edge.target].side_of(route.points[-1]) is not None
    for vertex_id, box in drawing.boxes.items():
        assert drawing.graph.vertices[vertex_id].box == box


def test_given_routing_keeps_the_boxes(row_boxes: dict[str, Box]) -> None:
    boxes = {**row_boxes, "c": make_box(50, 100, 40, 38)}
    instance = Instance(make_graph("abc", [("a", "b"), ("b", "c"), ("c", "a")], boxes=boxes))
    first = run_pipeline(instance)

    routed = drawing_to_instance(first.drawing)
    assert routed.mode is PipelineMode.GIVEN_ROUTING
    config = PipelineConfig(nudge_mode=NudgeMode.CONSTRAINED)
    second = run_pipeline(routed, config)
    assert set(second.timings) == {"edge ordering", "edge nudging", "metrics"}
    assert second.drawing.boxes == first.drawing.boxes
    assert set(second.drawing.routes) == {"e0", "e1", "e2"}
    assert tuple(second.metrics) == pytest.approx(tuple(first.metrics))


def test_only_the_largest_component_is_drawn(
    row_boxes: dict[str, Box], caplog: pytest.LogCaptureFixture
) -> None:
    boxes = {**row_boxes, "c": make_box(50, 200, 40, 38)}
    instance = Instance(make_graph("abc", [("a", "b")], boxes=boxes))
    result = run_pipeline(instance)
    assert set(result.drawing.boxes) == {"a", "b"}
    assert "Dropped vertices: c" in caplog.text


def test_mode_needs_geometry(row_boxes: dict[str, Box]) -> None:
    instance = Instance(make_graph("ab", [("a", "b")], boxes=row_boxes))
    with pytest.raises(InvalidArgument, match="needs an instance with paths"):
        run_pipeline(instance, PipelineConfig(mode=PipelineMode.GIVEN_ROUTING))
    with pytest.raises(InvalidArgument, match="needs an instance with positions"):
        run_pipeline(
            Instance(make_graph("ab", [("a", "b")])),
            PipelineConfig(mode=PipelineMode.GIVEN_POSITIONS),
        )
    with pytest.raises(InvalidArgument, match="empty graph"):
        run_pipeline(Instance(make_graph("", [])))


def test_positions_can_be_ignored(row_boxes: dict[str, Box]) -> None:
    instance = Instance(make_graph("ab", [("a", "b")], boxes=row_boxes))
    result = run_pipeline(instance, PipelineConfig(mode=PipelineMode.FORCE))
    assert "force-directed" in result.timings


def test_two_labeled_vertices() -> None:
    instance = parse_instance(
        {
            "vertices": [{"id": "a", "label": "Alpha"}, {"id": "b", "label": "B"}],
            "edges": [{"id": "e0", "source": "a", "target": "b"}],
        }
    )
    result = run_pipeline(instance)
    assert list(result.drawing.routes) == ["e0"]
    assert result.metrics.crossings == 0
    assert result.metrics.delta_min >= 12 - 1e-6


def test_triangle_is_drawn_without_crossings() -> None:
    result = run_pipeline(Instance(make_graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])))
    assert set(result.drawing.routes) == {"e0", "e1", "e2"}
    assert result.metrics.crossings == 0


@pytest.mark.parametrize("seed", range(5))
def test_random_multigraphs_are_drawn_soundly(seed: int) -> None:
    graph = generate_random_multigraph(9, 4, seed=seed)
    boxes = grid_boxes(list(graph.vertices), seed)
    result = run_pipeline(Instance(graph.with_boxes(boxes)), PipelineConfig(delta_min=12))
    drawing = result.drawing
    assert overlapping_pairs(drawing.boxes) == []
    assert set(drawing.routes) == set(graph.edges)
    for edge in graph.edges.values():
        route = drawing.routes[edge.id]
        assert route.is_orthogonal()
        assert drawing.boxes[edge.source].side_of(route.points[0]) is not None
        assert drawing.boxes[edge.target].side_of(route.points[-1]) is not None
    assert result.metrics.delta_min >= 12 - 1e-6


@pytest.mark.parametrize("mode", [NudgeMode.CONSTRAINED, NudgeMode.FULL])
@pytest.mark.parametrize("seed", range(3))
def test_given_routing_of_a_drawing_is_stable(seed: int, mode: NudgeMode) -> None:
    graph = generate_random_multigraph(9, 3, seed=seed)
    boxes = grid_boxes(list(graph.vertices), seed)
    config = PipelineConfig(nudge_mode=mode)
    first = run_pipeline(Instance(graph.with_boxes(boxes)), config)
    second = run_pipeline(drawing_to_instance(first.drawing), config)
    assert tuple(second.metrics) == pytest.approx(tuple(first.metrics))
