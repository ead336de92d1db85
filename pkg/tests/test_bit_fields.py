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

from ortholay.bits import DebugLayers


def test_from_names_is_lenient_about_case_and_dashes() -> None:
    layers = DebugLayers.from_names(["Channels", "routing-graph", " "])
    assert layers.channels
    assert layers.routing_graph
    assert not layers.representatives
    assert layers.names == ("channels", "routing_graph")
    assert list(layers) == ["channels", "routing_graph"]


def test_all_sets_every_bit() -> None:
    layers = DebugLayers.from_names(["all"])
    assert layers.names == ("channels", "representatives", "routing_graph", "constraint_arcs")


def test_unknown_name() -> None:
    with pytest.raises(ValueError, match="'walls' is not a valid bit"):
        DebugLayers.from_names(["walls"])


def test_operators_and_keyword_init() -> None:
    assert not DebugLayers()
    layers = DebugLayers(channels=True) | DebugLayers(constraint_arcs=True)
    assert layers == DebugLayers(0b1001)
    assert layers != DebugLayers(channels=True)
    layers.channels = False
    assert layers.value == 0b1000
    with pytest.raises(TypeError):
        DebugLayers(walls=True)
    with pytest.raises(TypeError):
        layers.channels = 1  # type: ignore[assignment]
