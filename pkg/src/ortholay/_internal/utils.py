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

import math

__all__ = ("EPS", "snap", "is_finite")

#: Absolute tolerance for geometric comparisons, in pixels.
EPS = 1e-9


def snap(value: float, digits: int = 6) -> float:
    """Rounds a coordinate so that values differing by float noise compare equal."""
    snapped = round(value, digits)
    # avoid a separate -0.0 key
    return 0.0 if snapped == 0 else snapped


def is_finite(*values: float) -> bool:
    return all(math.isfinite(value) for value in values)
