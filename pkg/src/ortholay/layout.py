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

from ._internal.layout import LayoutConfig, force_layout, overlapping_pairs, remove_overlaps
from ._internal.ports import SIDE_ORDER, Port, PortAssignment, PortKey, assign_ports

__all__ = (
    "LayoutConfig",
    "force_layout",
    "overlapping_pairs",
    "remove_overlaps",
    "PortKey",
    "Port",
    "PortAssignment",
    "SIDE_ORDER",
    "assign_ports",
)
