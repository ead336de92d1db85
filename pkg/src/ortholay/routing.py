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

from ._internal.ordering import (
    BundleOrder,
    join_collinear,
    order_crossings,
    order_paths,
    routes_from_paths,
    scan_direction,
)
from ._internal.routing import (
    EdgePath,
    count_path_crossings,
    path_crossings,
    reduce_crossings,
    route_edge,
    route_edges,
    shortest_route,
)
from ._internal.routing_graph import (
    BOTTOM_BORDER,
    LEFT_BORDER,
    RIGHT_BORDER,
    TOP_BORDER,
    Channel,
    Representative,
    RoutingGraph,
    build_routing_graph,
    construct_routing_graph,
    default_bounds,
    find_channels,
    merge_collinear_representatives,
    select_representatives,
)

__all__ = (
    "LEFT_BORDER",
    "RIGHT_BORDER",
    "BOTTOM_BORDER",
    "TOP_BORDER",
    "Channel",
    "Representative",
    "RoutingGraph",
    "default_bounds",
    "find_channels",
    "select_representatives",
    "merge_collinear_representatives",
    "build_routing_graph",
    "construct_routing_graph",
    "EdgePath",
    "shortest_route",
    "route_edge",
    "route_edges",
    "count_path_crossings",
    "path_crossings",
    "reduce_crossings",
    "BundleOrder",
    "scan_direction",
    "order_paths",
    "order_crossings",
    "join_collinear",
    "routes_from_paths",
)
