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

"""Orthogonal layout of multigraphs: boxes for vertices, axis-parallel routes for edges."""

__version__ = "0.1.0"

from . import bits, enums, errors, io, layout, metrics, models, nudging, routing
from ._internal.pipeline import PipelineConfig, PipelineResult, run_pipeline

__all__ = (
    "bits",
    "enums",
    "errors",
    "io",
    "layout",
    "metrics",
    "models",
    "nudging",
    "routing",
    "PipelineConfig",
    "PipelineResult",
    "run_pipeline",
)
