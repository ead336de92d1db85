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

import logging
import math
import random

import networkx as nx

from .errors import InvalidArgument
from .graph import Edge, Multigraph, Vertex

__all__ = ("edge_count_for", "generate_random_multigraph")

_log = logging.getLogger(__name__)


def edge_count_for(n: int, avg_degree: float) -> int:
    """The number of edges of an ``n``-vertex graph with the given average degree."""
    return int(math.floor(n * avg_degree / 2 + 0.5))


def generate_random_multigraph(n: int, avg_degree: float, seed: int = 0) -> Multigraph:
    """
    Generates a random connected multigraph.

    The first ``n - 1`` edges form a uniformly random spanning tree (decoded
    from a random Prüfer sequence), the remaining ones connect uniformly
    random vertex pairs and may be parallel edges or self-loops.

    Vertices are named ``v0``, ``v1``, ... and edges ``e0``, ``e1``, ...

    Parameters:
        n: The number of vertices.
        avg_degree: The average vertex degree.
        seed: The seed of the random number generator.

    Raises:
        InvalidArgument: When ``n < 1``, ``avg_degree < 0`` or
            the graph would have fewer than ``n - 1`` edges.

    Examples:
        >>> graph = generate_random_multigraph(5, 4, seed=1)
        >>> graph.n, graph.m
        (5, 10)
    """
    if n < 1:
        raise InvalidArgument("The graph needs at least one vertex.")
    if avg_degree < 0 or not math.isfinite(avg_degree):
        raise InvalidArgument("The average degree has to be a non-negative number.")
    m = edge_count_for(n, avg_degree)
    if m < n - 1:
        raise InvalidArgument(
            f"{m} edges can't connect {n} vertices, increase the average degree."
        )

    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    if n >= 2:
        sequence = [rng.randrange(n) for _ in range(n - 2)]
        tree = nx.from_prufer_sequence(sequence)
        pairs.extend(sorted((min(u, v), max(u, v)) for u, v in tree.edges()))
    for _ in range(m - len(pairs)):
        pairs.append((rng.randrange(n), rng.randrange(n)))

    vertices = [Vertex(f"v{index}") for index in range(n)]
    edges = [Edge(f"e{index}", f"v{u}", f"v{v}") for index, (u, v) in enumerate(pairs)]
    _log.debug("Generated a multigraph with n=%d and m=%d (seed %d).", n, m, seed)
    return Multigraph(vertices, edges)
