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

from typing import final

from .models.bases import BitField, bit

__all__ = ("DebugLayers",)


@final
class DebugLayers(BitField):
    """
    DebugLayers()

    Selects the debug overlays drawn on top of an SVG drawing.

    Examples:
        Enabling two layers by name::

            layers = DebugLayers.from_names(["channels", "routing-graph"])
    """

    __slots__ = ()

    #: Channels found between the vertex boxes.
    channels = bit(1 << 0)
    #: Representatives of the channels and port stubs.
    representatives = bit(1 << 1)
    #: Vertices and edges of the routing graph.
    routing_graph = bit(1 << 2)
    #: Arcs of the constraint graphs built by the last nudging passes.
    constraint_arcs = bit(1 << 3)
