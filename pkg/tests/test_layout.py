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

import math

import numpy as np
import pytest

from ortholay.errors import InvalidArgument
from ortholay.layout import LayoutConfig, force_layout, overlapping_pairs, remove_overlaps
from ortholay.models import Box, Multigraph

from .conftest import make_box, make_graph


@pytest.mark.parametrize(
    "kwargs",
    [
        {"iterations": 0},
        {"ideal_edge_length": 0},
        {"cooling": 1},
        {"cooling": 0},
        {"margin": -1},
    ],
)
def test_layout_config_validation(kwargs: dict[str, float]) -> None:
    with pytest.raises(InvalidArgument):
        LayoutConfig(**kwargs)  # type: ignore[arg-type]


def test_ideal_edge_length_defaults_to_twice_the_largest_diagonal() -> None:
    graph = make_graph("ab", [], boxes={"a": make_box(0, 0, 3, 4), "b": make_box(0, 0, 6, 8)})
    assert LayoutConfig().resolve_ideal_edge_length(graph) == 20
    assert LayoutConfig(ideal_edge_length=7).resolve_ideal_edge_length(graph) == 7
    assert LayoutConfig().resolve_ideal_edge_length(make_graph("a", [])) == 80


def test_force_layout_is_deterministic(triangle_graph: Multigraph) -> None:
    config = LayoutConfig(iterations=50, seed=3)
    first = force_layout(triangle_graph, config)
    second = force_layout(triangle_graph, config)
    assert first == second
    assert set(first) == {"a", "b", "c"}
    assert all(math.isfinite(point.x) and math.isfinite(point.y) for point in first.values())
    assert force_layout(triangle_graph, LayoutConfig(iterations=50, seed=4)) != first


def test_force_layout_stretches_a_path() -> None:
    graph = make_graph("abc", [("a", "b"), ("b", "c")])
    positions = force_layout(graph, LayoutConfig(ideal_edge_length=50))
    assert math.dist(positions["a"], positions["c"]) > math.dist(positions["a"], positions["b"])
    assert math.dist(positions["a"], positions["c"]) > math.dist(positions["b"], positions["c"])


def test_force_layout_handles_loops_and_single_vertices() -> None:
    positions = force_layout(make_graph("a", [("a", "a")]), LayoutConfig(iterations=10))
    assert list(positions) == ["a"]
    with pytest.raises(InvalidArgument):
        force_layout(Multigraph())


def test_overlapping_pairs() -> None:
    boxes = {
        "c": make_box(0, 0, 10, 10),
        "a": make_box(5, 5, 10, 10),
        "b": make_box(30, 0, 10, 10),
    }
    assert overlapping_pairs(boxes) == [("a", "c")]
    assert overlapping_pairs(boxes, margin=21) == [("a", "b"), ("a", "c"), ("b", "c")]
    assert overlapping_pairs({"a": boxes["a"]}) == []


def test_remove_overlaps_leaves_separated_boxes_alone(row_boxes: dict[str, Box]) -> None:
    assert remove_overlaps(row_boxes, margin=24) == row_boxes


def test_remove_overlaps_separates_coincident_boxes() -> None:
    boxes = {vertex_id: make_box(0, 0, 20, 10) for vertex_id in "abc"}
    result = remove_overlaps(boxes, margin=24)
    assert overlapping_pairs(result, margin=24) == []
    for vertex_id, box in result.items():
        assert (box.width, box.height) == (20, 10)
        assert box.original_width == boxes[vertex_id].original_width


@pytest.mark.parametrize("centre", [0, 1000, 2**60])
def test_remove_overlaps_separates_boxes_on_integer_centres(centre: int) -> None:
    boxes = {"a": Box(centre, 0, 20, 10, 20, 10), "b": Box(centre, 0, 20, 10, 20, 10)}
    result = remove_overlaps(boxes, margin=24)
    assert overlapping_pairs(result, margin=24) == []
    assert result["a"].cx != result["b"].cx or result["a"].cy != result["b"].cy


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_remove_overlaps_random_clusters(seed: int) -> None:
    rng = np.random.default_rng(seed)
    boxes = {
        f"v{i}": make_box(
            float(rng.uniform(0, 60)),
            float(rng.uniform(0, 60)),
            float(rng.uniform(10, 50)),
            38,
        )
        for i in range(12)
    }
    result = remove_overlaps(boxes, margin=10)
    assert overlapping_pairs(result, margin=10) == []
    assert set(result) == set(boxes)


def test_remove_overlaps_rejects_bad_input() -> None:
    with pytest.raises(InvalidArgument):
        remove_overlaps({"a": make_box(0, 0, 1, 1)}, margin=-1)
    with pytest.raises(InvalidArgument):
        remove_overlaps({"a": make_box(math.inf, 0, 1, 1)})
