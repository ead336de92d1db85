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

from ._internal.lp import LinearProgram, LPResult, solve_lp
from ._internal.nudging import (
    DEFAULT_SCHEDULE,
    MAX_SCHEDULE_ROUNDS,
    ConstraintArc,
    ConstraintProblem,
    NudgeObject,
    NudgeResult,
    OrderChi,
    Separation,
    apply_nudge,
    build_constraint_graph,
    build_order_chi,
    nudge,
    run_nudging_passes,
    simplify_constraints,
)

__all__ = (
    "LinearProgram",
    "LPResult",
    "solve_lp",
    "DEFAULT_SCHEDULE",
    "MAX_SCHEDULE_ROUNDS",
    "NudgeObject",
    "OrderChi",
    "Separation",
    "ConstraintProblem",
    "ConstraintArc",
    "NudgeResult",
    "build_order_chi",
    "build_constraint_graph",
    "simplify_constraints",
    "nudge",
    "apply_nudge",
    "run_nudging_passes",
)
