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

import itertools
import logging
import math
from typing import Mapping, Optional, final

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay, QhullError

from .errors import InternalError, InvalidArgument
from .geometry import Box, Point
from .graph import Multigraph
from .utils import EPS, is_finite

__all__ = ("LayoutConfig", "force_layout", "remove_overlaps", "overlapping_pairs")

_log = logging.getLogger(__name__)

#: Fallback ideal edge length for graphs without boxes.
DEFAULT_IDEAL_EDGE_LENGTH = 80.0
_MIN_DISTANCE = 0.01
_COINCIDENT_OFFSET = 1e-6


@final
class LayoutConfig:
    """
    LayoutConfig(*, iterations=1000, ideal_edge_length=None, cooling=0.99, seed=0, margin=24)

    Parameters of the force-directed layout and the overlap removal.

    Parameters:
        iterations: The number of force iterations.
        ideal_edge_length:
            The edge length the forces balance at. When not passed,
            twice the largest box diagonal of the graph is used.
        cooling:
            The factor the temperature is multiplied with after each
            iteration, starting from a tenth of the side of the initial square.
        seed: Seed of the random initial placement.
        margin: The minimum gap between two boxes after overlap removal.

    Raises:
        InvalidArgument: When a parameter is out of its range.
    """

    __slots__ = ("iterations", "ideal_edge_length", "cooling", "seed", "margin")

    def __init__(
        self,
        *,
        iterations: int = 1000,
        ideal_edge_length: Optional[float] = None,
        cooling: float = 0.99,
        seed: int = 0,
        margin: float = 24.0,
    ) -> None:
        if iterations < 1:
            raise InvalidArgument("iterations has to be at least 1.")
        if ideal_edge_length is not None and not ideal_edge_length > 0:
            raise InvalidArgument("ideal_edge_length has to be positive.")
        if not 0 < cooling < 1:
            raise InvalidArgument("cooling has to lie in (0, 1).")
        if margin < 0:
            raise InvalidArgument("margin can't be negative.")
        self.iterations = iterations
        self.ideal_edge_length = ideal_edge_length
        self.cooling = cooling
        self.seed = seed
        self.margin = margin

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__} iterations={self.iterations}"
            f" ideal_edge_length={self.ideal_edge_length} cooling={self.cooling}"
            f" seed={self.seed} margin={self.margin}>"
        )

    def resolve_ideal_edge_length(self, graph: Multigraph) -> float:
        if self.ideal_edge_length is not None:
            return self.ideal_edge_length
        diagonals = [
            vertex.box.diagonal for vertex in graph.vertices.values() if vertex.box
        ]
        if not diagonals:
            return DEFAULT_IDEAL_EDGE_LENGTH
        return 2 * max(diagonals)


def force_layout(graph: Multigraph, config: Optional[LayoutConfig] = None) -> dict[str, Point]:
    """
    Places the vertices as points with a Fruchterman-Reingold layout.

    Every pair of vertices repels with ``k²/d`` and every edge occurrence
    attracts its endpoints with ``d²/k``. Self-loops exert no force.

    Parameters:
        graph: The graph to lay out. It should be connected.
        config: The layout parameters.

    Returns:
        The position of every vertex. Identical for identical inputs.

    Raises:
        InvalidArgument: The graph has no vertices.
    """
    if config is None:
        config = LayoutConfig()
    if graph.n == 0:
        raise InvalidArgument("Can't lay out an empty graph.")

    ids = list(graph.vertices)
    index = {vertex_id: i for i, vertex_id in enumerate(ids)}
    k = config.resolve_ideal_edge_length(graph)
    side = k * math.sqrt(graph.n)

    rng = np.random.default_rng(config.seed)
    positions = rng.uniform(0.0, side, size=(graph.n, 2))

    pairs = [
        (index[edge.source], index[edge.target])
        for edge in graph.edges.values()
        if not edge.is_self_loop
    ]
    sources = np.array([pair[0] for pair in pairs], dtype=np.intp)
    targets = np.array([pair[1] for pair in pairs], dtype=np.intp)

    temperature = side / 10
    for _ in range(config.iterations):
        delta = positions[:, np.newaxis, :] - positions[np.newaxis, :, :]
        distance = np.maximum(np.linalg.norm(delta, axis=-1), _MIN_DISTANCE)
        np.fill_diagonal(distance, np.inf)
        push = k * k / distance / distance
        displacement = np.sum(delta * push[..., np.newaxis], axis=1)

        if pairs:
            edge_delta = positions[sources] - positions[targets]
            edge_distance = np.maximum(
                np.linalg.norm(edge_delta, axis=-1), _MIN_DISTANCE
            )
            pull = edge_delta * (edge_distance / k)[:, np.newaxis]
            np.add.at(displacement, sources, -pull)
            np.add.at(displacement, targets, pull)

        length = np.linalg.norm(displacement, axis=-1)
        scale = np.where(
            length > 0, np.minimum(length, temperature) / np.maximum(length, EPS), 0.0
        )
        positions = positions + displacement * scale[:, np.newaxis]
        temperature *= config.cooling

    if not np.all(np.isfinite(positions)):
        raise InternalError("Force layout produced non-finite positions.")
    return {
        vertex_id: Point(float(positions[i, 0]), float(positions[i, 1]))
        for vertex_id, i in index.items()
    }


def overlapping_pairs(boxes: Mapping[str, Box], margin: float = 0.0) -> list[tuple[str, str]]:
    """All pairs of boxes that are closer than ``margin`` along both axes."""
    ids = sorted(boxes)
    if len(ids) < 2:
        return []
    centres = np.array([[boxes[i].cx, boxes[i].cy] for i in ids], dtype=float)
    sizes = np.array([[boxes[i].width, boxes[i].height] for i in ids])
    gaps = (
        np.abs(centres[:, np.newaxis, :] - centres[np.newaxis, :, :])
        - (sizes[:, np.newaxis, :] + sizes[np.newaxis, :, :]) / 2
    )
    close = np.all(gaps < margin - EPS, axis=-1)
    first, second = np.nonzero(np.triu(close, k=1))
    return [(ids[a], ids[b]) for a, b in zip(first.tolist(), second.tolist())]


def _proximity_edges(centres: np.ndarray) -> set[tuple[int, int]]:
    count = len(centres)
    if count <= 3:
        return set(itertools.combinations(range(count), 2))
    try:
        triangulation = Delaunay(centres)
    except QhullError:
        # all centres on one line
        return set(itertools.combinations(range(count), 2))
    edges: set[tuple[int, int]] = set()
    for simplex in triangulation.simplices:
        for a, b in itertools.combinations(sorted(simplex.tolist()), 2):
            edges.add((a, b))
    return edges


def _overlap_factor(a: Box, b: Box, dx: float, dy: float, margin: float) -> float:
    """The factor the centre distance has to grow by to separate the boxes."""
    factors = []
    if abs(dx) > EPS:
        factors.append(((a.width + b.width) / 2 + margin) / abs(dx))
    if abs(dy) > EPS:
        factors.append(((a.height + b.height) / 2 + margin) / abs(dy))
    return min(factors) if factors else math.inf


def remove_overlaps(
    boxes: Mapping[str, Box], margin: float = 24.0, *, max_iterations: Optional[int] = None
) -> dict[str, Box]:
    """
    Removes box overlaps by growing a minimum spanning tree of a proximity graph.

    Overlapping tree edges are stretched until the boxes are ``margin`` apart,
    moving the whole subtree along. This is repeated until no pair of boxes
    is closer than ``margin`` along both axes. Box sizes never change.

    Parameters:
        boxes: The boxes to separate, keyed by vertex id.
        margin: The minimum gap between two boxes along at least one axis.
        max_iterations: Upper bound on the number of rounds.

    Returns:
        The separated boxes. Boxes that don't overlap are returned unchanged.

    Raises:
        InvalidArgument: When a box has non-finite coordinates.
        InternalError: When the boxes couldn't be separated in time.
    """
    if margin < 0:
        raise InvalidArgument("margin can't be negative.")
    for vertex_id, box in boxes.items():
        if not is_finite(box.cx, box.cy, box.width, box.height):
            raise InvalidArgument(f"Box of vertex {vertex_id!r} is not finite.")

    overlaps = overlapping_pairs(boxes, margin)
    if not overlaps:
        return dict(boxes)

    ids = sorted(boxes)
    index = {vertex_id: i for i, vertex_id in enumerate(ids)}
    shapes = [boxes[vertex_id] for vertex_id in ids]
    centres = np.array([[box.cx, box.cy] for box in shapes], dtype=float)

    # identical centres get the later vertex shifted to the right
    seen: dict[tuple[float, float], int] = {}
    for i in range(len(ids)):
        key = (float(centres[i, 0]), float(centres[i, 1]))
        while key in seen:
            x = centres[i, 0]
            centres[i, 0] = max(x + _COINCIDENT_OFFSET, np.nextafter(x, np.inf))
            key = (float(centres[i, 0]), float(centres[i, 1]))
        seen[key] = i

    if max_iterations is None:
        max_iterations = 10 * len(ids) + 100
    for iteration in range(max_iterations):
        current = {
            vertex_id: shapes[i].moved_to(float(centres[i, 0]), float(centres[i, 1]))
            for i, vertex_id in enumerate(ids)
        }
        overlaps = overlapping_pairs(current, margin)
        if not overlaps:
            _log.debug("Overlap removal finished after %d rounds.", iteration)
            return current

        proximity = nx.Graph()
        proximity.add_nodes_from(range(len(ids)))
        candidates = _proximity_edges(centres)
        candidates.update((index[a], index[b]) for a, b in overlaps)
        factors: dict[tuple[int, int], float] = {}
        for a, b in candidates:
            dx, dy = centres[b] - centres[a]
            factor = _overlap_factor(shapes[a], shapes[b], dx, dy, margin)
            factors[a, b] = factors[b, a] = factor
            if factor > 1 + EPS:
                weight = -factor
            else:
                gap_x, gap_y = current[ids[a]].gap(current[ids[b]])
                weight = max(gap_x, gap_y, 0.0)
            proximity.add_edge(a, b, weight=weight)
        if not nx.is_connected(proximity):
            for a, b in itertools.combinations(range(len(ids)), 2):
                if not proximity.has_edge(a, b):
                    dx, dy = centres[b] - centres[a]
                    factor = _overlap_factor(shapes[a], shapes[b], dx, dy, margin)
                    factors[a, b] = factors[b, a] = factor
                    proximity.add_edge(a, b, weight=-factor if factor > 1 + EPS else 0.0)

        tree = nx.minimum_spanning_tree(proximity, weight="weight")
        grown = centres.copy()
        for parent, child in nx.bfs_edges(tree, 0):
            stretch = max(factors[parent, child], 1.0)
            grown[child] = grown[parent] + (centres[child] - centres[parent]) * stretch
        centres = grown

    raise InternalError(f"Overlap removal didn't converge in {max_iterations} rounds.")
