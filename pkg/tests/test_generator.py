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

from ortholay.errors import InvalidArgument
from ortholay.io import generate_random_multigraph


@pytest.mark.parametrize(
    ("n", "avg_degree", "m"),
    [(5, 4, 10), (1, 0, 0), (2, 1, 1), (10, 2.5, 13), (7, 3, 11), (50, 4, 100)],
)
def test_edge_count(n: int, avg_degree: float, m: int) -> None:
    graph = generate_random_multigraph(n, avg_degree, seed=3)
    assert (graph.n, graph.m) == (n, m)
    assert graph.is_connected()


@pytest.mark.parametrize("seed", range(5))
def test_generated_graphs_are_connected(seed: int) -> None:
    graph = generate_random_multigraph(30, 2, seed=seed)
    assert graph.is_connected()
    assert list(graph.vertices) == [f"v{index}" for index in range(30)]
    assert list(graph.edges) == [f"e{index}" for index in range(30)]


def test_same_seed_same_graph() -> None:
    first = generate_random_multigraph(12, 4, seed=7)
    second = generate_random_multigraph(12, 4, seed=7)
    assert list(first.edges.values()) == list(second.edges.values())
    other = generate_random_multigraph(12, 4, seed=8)
    assert list(first.edges.values()) != list(other.edges.values())


@pytest.mark.parametrize(
    ("n", "avg_degree", "message"),
    [
        (0, 2, "at least one vertex"),
        (5, -1, "non-negative"),
        (5, float("nan"), "non-negative"),
        (10, 1, "can't connect 10 vertices"),
    ],
)
def test_invalid_arguments(n: int, avg_degree: float, message: str) -> None:
    with pytest.raises(InvalidArgument, match=message):
        generate_random_multigraph(n, avg_degree)
