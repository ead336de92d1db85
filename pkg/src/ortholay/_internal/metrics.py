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
from typing import Mapping, NamedTuple, Union

import numpy as np

from .drawing import Drawing, Route
from .enums import Orientation
from .errors import InvalidArgument
from .ordering import join_collinear
from .utils import EPS

__all__ = (
    "OVERLAP_POLICY",
    "DrawingMetrics",
    "compute_metrics",
    "count_crossings",
    "minimum_object_distance",
)

_log = logging.getLogger(__name__)

#: How overlapping parallel segments of two edges are counted.
OVERLAP_POLICY = "parallel-overlap-counts-once"


class DrawingMetrics(NamedTuple):
    """The quality metrics of a drawing."""

    crossings: int
    bends: int
    total_edge_length: float
    edge_length_variance: float
    area: float
    aspect_ratio: float
    delta_min: float

    def as_dict(self) -> dict[str, Union[int, float, str]]:
        """The metrics as a flat record, including the crossing overlap policy."""
        record: dict[str, Union[int, float, str]] = dict(self._asdict())
        record["overlap_policy"] = OVERLAP_POLICY
        return record


def _segment_table(routes: Mapping[str, Route]) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Rows of ``(x0, y0, x1, y1)`` with the orientation flag and owning edge ids."""
    rows = []
    horizontal = []
    owners = []
    for edge_id in sorted(routes):
        route = routes[edge_id]
        for index in range(route.segment_count):
            start, end = route.points[index], route.points[index + 1]
            if abs(start.x - end.x) + abs(start.y - end.y) <= EPS:
                continue
            rows.append(
                (min(start.x, end.x), min(start.y, end.y), max(start.x, end.x), max(start.y, end.y))
            )
            horizontal.append(route.orientation(index) is Orientation.HORIZONTAL)
            owners.append(edge_id)
    table = np.array(rows, dtype=float).reshape(-1, 4)
    return table, np.array(horizontal, dtype=bool), owners


def count_crossings(routes: Mapping[str, Route], tolerance: float = 1e-6) -> int:
    """
    Counts the crossings between the routes of distinct edges.

    A horizontal and a vertical segment cross when they meet at a point
    interior to both. Two collinear segments overlapping with positive
    length count as one crossing.
    """
    table, horizontal, owners = _segment_table(routes)
    if len(table) < 2:
        return 0
    codes = np.unique(np.array(owners), return_inverse=True)[1]
    distinct = codes[:, None] != codes[None, :]
    x0, y0, x1, y1 = (table[:, k] for k in range(4))

    hs = np.flatnonzero(horizontal)
    vs = np.flatnonzero(~horizontal)
    crossings = 0
    if len(hs) and len(vs):
        hy, hx0, hx1 = y0[hs][:, None], x0[hs][:, None], x1[hs][:, None]
        vx, vy0, vy1 = x0[vs][None, :], y0[vs][None, :], y1[vs][None, :]
        transversal = (
            (hx0 + tolerance < vx)
            & (vx < hx1 - tolerance)
            & (vy0 + tolerance < hy)
            & (hy < vy1 - tolerance)
            & distinct[np.ix_(hs, vs)]
        )
        crossings += int(transversal.sum())

    for members, fixed, lo, hi in ((hs, y0, x0, x1), (vs, x0, y0, y1)):
        if len(members) < 2:
            continue
        same_line = np.abs(fixed[members][:, None] - fixed[members][None, :]) <= tolerance
        overlap = np.minimum(hi[members][:, None], hi[members][None, :]) - np.maximum(
            lo[members][:, None], lo[members][None, :]
        )
        parallel = same_line & (overlap > tolerance) & distinct[np.ix_(members, members)]
        crossings += int(np.triu(parallel, k=1).sum())
    return crossings


def minimum_object_distance(drawing: Drawing, tolerance: float = 1e-9) -> float:
    """
    The smallest distance between two objects that may not touch.

    Objects are the boxes and the route segments. Segments are not measured
    against the other segments of their route or against the boxes of their
    route's end points, and pairs that intersect are skipped. A pair is
    measured only when the projections of both objects overlap on one axis;
    its distance is the gap along the other axis.

    Returns:
        The distance, or infinity if no pair is measured.
    """
    routes = join_collinear(drawing.routes)
    table, _, owners = _segment_table(routes)
    vertex_ids = sorted(drawing.boxes)
    box_rows = np.array(
        [
            (box.left, box.bottom, box.right, box.top)
            for box in (drawing.boxes[vertex_id] for vertex_id in vertex_ids)
        ],
        dtype=float,
    ).reshape(-1, 4)
    rects = np.vstack((box_rows, table))
    if len(rects) < 2:
        return math.inf

    box_count = len(vertex_ids)
    vertex_index = {vertex_id: index for index, vertex_id in enumerate(vertex_ids)}
    edge_ids = sorted(set(owners))
    edge_index = {edge_id: index for index, edge_id in enumerate(edge_ids)}
    # owner of every object: a box is its own owner, a segment its edge
    owner = np.concatenate(
        (np.arange(box_count), box_count + np.array([edge_index[e] for e in owners], dtype=int))
    )
    excluded = owner[:, None] == owner[None, :]
    for edge_id in edge_ids:
        edge = drawing.graph.edges[edge_id]
        segments = np.flatnonzero(owner == box_count + edge_index[edge_id])
        for vertex_id in {edge.source, edge.target}:
            box = vertex_index[vertex_id]
            excluded[segments, box] = True
            excluded[box, segments] = True

    gap_x = np.maximum(
        0.0,
        np.maximum(rects[:, None, 0] - rects[None, :, 2], rects[None, :, 0] - rects[:, None, 2]),
    )
    gap_y = np.maximum(
        0.0,
        np.maximum(rects[:, None, 1] - rects[None, :, 3], rects[None, :, 1] - rects[:, None, 3]),
    )
    measured = (np.minimum(gap_x, gap_y) <= tolerance) & (np.maximum(gap_x, gap_y) > tolerance)
    measured &= ~excluded
    if not measured.any():
        return math.inf
    return float(np.maximum(gap_x, gap_y)[measured].min())


def compute_metrics(drawing: Drawing) -> DrawingMetrics:
    """
    Computes the quality metrics of a drawing.

    Bends are counted after joining collinear segments. The variance is the
    population variance of the edge lengths and the aspect ratio that of
    the bounding box of all boxes and routes.

    Raises:
        InvalidArgument: The drawing has no boxes.
    """
    if not drawing.boxes:
        raise InvalidArgument("Can't compute metrics of an empty drawing.")
    routes = join_collinear(drawing.routes)
    lengths = np.array([routes[edge_id].length for edge_id in sorted(routes)], dtype=float)
    rect = drawing.bounding_rect()
    width, height = rect.width, rect.height
    shorter = min(width, height)
    metrics = DrawingMetrics(
        crossings=count_crossings(routes),
        bends=sum(route.bends for route in routes.values()),
        total_edge_length=float(lengths.sum()),
        edge_length_variance=float(lengths.var()) if len(lengths) else 0.0,
        area=width * height,
        aspect_ratio=max(width, height) / shorter if shorter > 0 else math.inf,
        delta_min=minimum_object_distance(drawing),
    )
    _log.debug("Computed metrics: %s", metrics)
    return metrics
