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

from ._internal.benchmark import BenchmarkReport, BenchmarkRow, run_benchmark
from ._internal.generator import generate_random_multigraph
from ._internal.io import (
    HAS_MSGPACK,
    Instance,
    drawing_to_instance,
    dump_instance,
    load_instance,
    parse_instance,
    write_instance,
)
from ._internal.svg import SvgStyle, emit_svg

__all__ = (
    "HAS_MSGPACK",
    "Instance",
    "parse_instance",
    "load_instance",
    "dump_instance",
    "write_instance",
    "drawing_to_instance",
    "generate_random_multigraph",
    "SvgStyle",
    "emit_svg",
    "BenchmarkRow",
    "BenchmarkReport",
    "run_benchmark",
)
