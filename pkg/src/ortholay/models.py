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

from ._internal.drawing import Drawing, Route
from ._internal.geometry import (
    Box,
    Interval,
    OrthoSegment,
    Point,
    Rect,
    box_from_label,
    polyline_length,
    segment_intersection,
    side_capacity,
    simplify_polyline,
)
from ._internal.graph import Edge, Multigraph, Vertex
from ._internal.models import BoxData, EdgeData, InstanceData, VertexData

__all__ = (
    "Point",
    "Interval",
    "Rect",
    "Box",
    "OrthoSegment",
    "segment_intersection",
    "box_from_label",
    "side_capacity",
    "simplify_polyline",
    "polyline_length",
    "Vertex",
    "Edge",
    "Multigraph",
    "Route",
    "Drawing",
    "BoxData",
    "VertexData",
    "EdgeData",
    "InstanceData",
)
