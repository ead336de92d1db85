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
import math

import numpy as np
import pytest

from ortholay.errors import InvalidArgument
from ortholay.metrics import (
    OVERLAP_POLICY,
    compute_metrics,
    count_crossings,
    minimum_object_distance,
)
from ortholay.models import Box, Drawing, Multigraph, Point, Route

from .conftest import make_box, make_graph


def _routes(*polylines: list[tuple[float, float]]) -> dict[str, Route]:
    return {
        f"e{index}": Route(f"e{index}", tuple(Point(*point) for point in points))
        for index, points in enumerate(polylines)
    }


def test_plus_sign_crosses_once() -> None:
    assert count_crossings(_routes([(-5, 0), (5, 0)], [(0, -5), (0, 5)])) == 1


def test_touching_segments_do_not_cross() -> None:
    assert count_crossings(_routes([(-5, 0), (5, 0)], [(0, 0), (0, 5)])) == 0
    assert count_crossings(_routes([(-5, 0), (5, 0)], [(5, 0), (5, 5)])) == 0
    assert count_crossings(_routes([(0, 0), (10, 0)], [(10, 0), (20, 0)])) == 0


def test_parallel_overlap_counts_once() -> None:
    assert count_crossings(_routes([(0, 0), (10, 0)], [(5, 0), (15, 0)])) == 1
    assert count_crossings(_routes([(0, 0), (0, 10)], [(0, 2), (0, 4)])) == 1


def test_a_route_never_crosses_itself() -> None:
    routes = _routes([(0, 0), (10, 0), (10, 5), (5, 5), (5, -5)])
    assert count_crossings(routes) == 0


def _naive_crossings(routes: dict[str, Route]) -> int:
    segments = [
        (edge_id, segment)
        for edge_id, route in routes.items()
        for segment in route.segments()
        if segment.length > 0
    ]
    count = 0
    for (first_id, first), (second_id, second) in itertools.combinations(segments, 2):
        if first_id == second_id:
            continue
        if first.orientation is second.orientation:
            overlap = min(first.hi, second.hi) - max(first.lo, second.lo)
            count += first.fixed == second.fixed and overlap > 0
        else:
            count += first.lo < second.fixed < first.hi and second.lo < first.fixed < second.hi
    return count


def _random_polyline(rng: np.random.Generator) -> list[tuple[float, float]]:
    x, y = (int(value) for value in rng.integers(0, 10, size=2))
    points = [(x, y)]
    for step in range(int(rng.integers(1, 6))):
        if step % 2:
            x = int(rng.integers(0, 10))
        else:
            y = int(rng.integers(0, 10))
        points.append((x, y))
    return points


@pytest.mark.parametrize("seed", range(10))
def test_count_crossings_matches_pairwise_count(seed: int) -> None:
    rng = np.random.default_rng(seed)
    routes = _routes(*(_random_polyline(rng) for _ in range(6)))
    assert count_crossings(routes) == _naive_crossings(routes)


def test_metrics_of_an_l_shape() -> None:
    boxes = {"a": make_box(0, 0, 20, 20), "b": make_box(50, 50, 20, 20)}
    graph = make_graph("ab", [("a", "b")], boxes=boxes)
    routes = _routes([(10, 0), (30, 0), (50, 0), (50, 40)])
    metrics = compute_metrics(Drawing(graph, boxes, routes))
    assert metrics.crossings == 0
    assert metrics.bends == 1
    assert metrics.total_edge_length == 80
    assert metrics.edge_length_variance == 0
    assert metrics.area == 4900
    assert metrics.aspect_ratio == 1


def test_aspect_ratio_and_variance() -> None:
    boxes = {
        "a": make_box(0, 0, 40, 20),
        "b": make_box(100, 0, 40, 20),
        "c": make_box(0, 60, 40, 20),
    }
    graph = make_graph("abc", [("a", "b"), ("a", "c")], boxes=boxes)
    routes = _routes([(20, 0), (80, 0)], [(0, 10), (0, 50)])
    metrics = compute_metrics(Drawing(graph, boxes, routes))
    assert metrics.total_edge_length == 100
    assert metrics.edge_length_variance == 100
    assert metrics.area == 140 * 80
    assert metrics.aspect_ratio == pytest.approx(140 / 80)


def test_single_box_metrics() -> None:
    boxes = {"a": make_box(0, 0, 40, 20)}
    metrics = compute_metrics(Drawing(make_graph("a", [], boxes=boxes), boxes, {}))
    assert metrics.aspect_ratio == 2
    assert metrics.total_edge_length == 0
    assert metrics.delta_min == math.inf
    record = metrics.as_dict()
    assert record["overlap_policy"] == OVERLAP_POLICY
    assert record["crossings"] == 0
    assert list(record)[:3] == ["crossings", "bends", "total_edge_length"]


def test_empty_drawing_is_rejected() -> None:
    with pytest.raises(InvalidArgument):
        compute_metrics(Drawing(Multigraph(), {}, {}))


def test_minimum_object_distance(row_boxes: dict[str, Box]) -> None:
    graph = make_graph("ab", [("a", "b")], boxes=row_boxes)
    drawing = Drawing(graph, row_boxes, _routes([(20, 0), (80, 0)]))
    assert minimum_object_distance(drawing) == 60

    boxes = {**row_boxes, "c": make_box(50, 30, 20, 20)}
    graph = make_graph("abc", [("a", "b")], boxes=boxes)
    drawing = Drawing(graph, boxes, _routes([(20, 0), (80, 0)]))
    assert minimum_object_distance(drawing) == 20
