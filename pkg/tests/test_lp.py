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

import math

import pytest

from ortholay.enums import LPStatus
from ortholay.errors import InvalidArgument
from ortholay.nudging import LinearProgram, solve_lp


def _walls(right: float, segments: int) -> tuple[LinearProgram, list[int], int]:
    program = LinearProgram()
    left_wall = program.add_variable("left", lower=0, upper=0)
    movable = [program.add_variable(f"s{index}") for index in range(segments)]
    right_wall = program.add_variable("right", lower=right, upper=right)
    gap = program.add_variable("gap", lower=0, cost=-1)
    chain = [left_wall, *movable, right_wall]
    for low, high in zip(chain, chain[1:]):
        program.add_difference_constraint(low, high, gap_variable=gap)
    return program, movable, gap


def test_single_segment_is_centred() -> None:
    program, (segment,), gap = _walls(10, 1)
    result = solve_lp(program)
    assert result.is_optimal
    assert result.value(segment) == pytest.approx(5)
    assert result.value(gap) == pytest.approx(5)
    assert result.objective == pytest.approx(-5)


def test_segments_are_spread_evenly() -> None:
    program, segments, gap = _walls(12, 2)
    result = solve_lp(program)
    assert [result.value(segment) for segment in segments] == pytest.approx([4, 8])
    assert result.value(gap) == pytest.approx(4)
    assert program.variable_count == 5
    assert program.constraint_count == 3


def test_fixed_gap_and_costs() -> None:
    program = LinearProgram()
    x = program.add_variable("x", lower=0)
    y = program.add_variable("y", cost=1)
    program.add_difference_constraint(x, y, gap=3)
    program.add_cost(x, 2)
    result = solve_lp(program)
    assert result.values == pytest.approx((0, 3))
    assert result.objective == pytest.approx(3)


def test_fix_pins_a_variable() -> None:
    program = LinearProgram()
    x = program.add_variable("x", cost=1, lower=-5)
    program.fix(x, 2)
    assert solve_lp(program).values == pytest.approx((2,))


def test_contradicting_bounds_are_infeasible() -> None:
    program = LinearProgram()
    program.add_variable("x", lower=5, upper=3)
    result = solve_lp(program)
    assert result.status is LPStatus.INFEASIBLE
    assert result.values == ()
    assert not result.is_optimal


def test_empty_program() -> None:
    result = solve_lp(LinearProgram())
    assert result.is_optimal
    assert result.objective == 0


def test_invalid_coefficients() -> None:
    program = LinearProgram()
    x = program.add_variable("x")
    with pytest.raises(InvalidArgument):
        program.add_variable("y", cost=math.inf)
    with pytest.raises(InvalidArgument):
        program.add_upper_constraint({x: 1}, math.inf)
    with pytest.raises(InvalidArgument):
        program.add_upper_constraint({x: math.nan}, 1)
    with pytest.raises(InvalidArgument, match="not declared"):
        program.add_cost(3, 1)
    assert program.names == ["x"]
