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

import logging
import math
from typing import Mapping, NamedTuple, Optional, final

import numpy as np
import scipy.optimize
import scipy.sparse

from .enums import LPStatus
from .errors import InternalError, InvalidArgument

__all__ = ("LPResult", "LinearProgram", "solve_lp")

_log = logging.getLogger(__name__)

_STATUSES = {0: LPStatus.OPTIMAL, 2: LPStatus.INFEASIBLE, 3: LPStatus.UNBOUNDED}


class LPResult(NamedTuple):
    """The outcome of `solve_lp()`. ``values`` is empty unless the status is optimal."""

    status: LPStatus
    values: tuple[float, ...] = ()
    objective: Optional[float] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL

    def value(self, variable: int) -> float:
        return self.values[variable]


@final
class LinearProgram:
    """
    LinearProgram()

    A linear program in the form ``minimize c·x`` subject to ``A·x ≤ b``
    and variable bounds.

    Examples:
        The toy problem of two walls and one segment::

            program = LinearProgram()
            left = program.add_variable("left", lower=0, upper=0)
            segment = program.add_variable("segment")
            right = program.add_variable("right", lower=10, upper=10)
            gap = program.add_variable("gap", lower=0, cost=-1)
            program.add_difference_constraint(left, segment, gap_variable=gap)
            program.add_difference_constraint(segment, right, gap_variable=gap)
            result = solve_lp(program)  # segment at 5
    """

    __slots__ = ("names", "_lower", "_upper", "_costs", "_rows", "_columns", "_values", "_rhs")

    def __init__(self) -> None:
        #: list[str]: The names of the variables, for debugging.
        self.names: list[str] = []
        self._lower: list[float] = []
        self._upper: list[float] = []
        self._costs: list[float] = []
        self._rows: list[int] = []
        self._columns: list[int] = []
        self._values: list[float] = []
        self._rhs: list[float] = []

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__} variables={self.variable_count}"
            f" constraints={self.constraint_count}>"
        )

    @property
    def variable_count(self) -> int:
        return len(self.names)

    @property
    def constraint_count(self) -> int:
        return len(self._rhs)

    def add_variable(
        self,
        name: str = "",
        *,
        lower: float = -math.inf,
        upper: float = math.inf,
        cost: float = 0.0,
    ) -> int:
        """Declares a variable and returns its index."""
        if not math.isfinite(cost) or math.isnan(lower) or math.isnan(upper):
            raise InvalidArgument(f"Variable {name!r} has a non-finite coefficient.")
        self.names.append(name or f"x{len(self.names)}")
        self._lower.append(lower)
        self._upper.append(upper)
        self._costs.append(cost)
        return len(self.names) - 1

    def add_cost(self, variable: int, cost: float) -> None:
        self._check(variable)
        self._costs[variable] += cost

    def fix(self, variable: int, value: float) -> None:
        self._check(variable)
        self._lower[variable] = self._upper[variable] = value

    def _check(self, variable: int) -> None:
        if not 0 <= variable < len(self.names):
            raise InvalidArgument(f"Variable {variable} is not declared.")

    def add_upper_constraint(self, coefficients: Mapping[int, float], upper: float) -> None:
        """Adds ``Σ coefficients[i]·x[i] ≤ upper``."""
        if not math.isfinite(upper):
            raise InvalidArgument("Constraint bound has to be finite.")
        row = len(self._rhs)
        for variable, coefficient in coefficients.items():
            self._check(variable)
            if not math.isfinite(coefficient):
                raise InvalidArgument("Constraint coefficients have to be finite.")
            if coefficient:
                self._rows.append(row)
                self._columns.append(variable)
                self._values.append(coefficient)
        self._rhs.append(upper)

    def add_lower_constraint(self, coefficients: Mapping[int, float], lower: float) -> None:
        """Adds ``Σ coefficients[i]·x[i] ≥ lower``."""
        self.add_upper_constraint(
            {variable: -coefficient for variable, coefficient in coefficients.items()},
            -lower,
        )

    def add_difference_constraint(
        self,
        low: int,
        high: int,
        *,
        gap: float = 0.0,
        gap_variable: Optional[int] = None,
    ) -> None:
        """Adds ``x[high] - x[low] ≥ gap``, or ``≥ x[gap_variable]`` if given."""
        coefficients: dict[int, float] = {high: 1.0}
        coefficients[low] = coefficients.get(low, 0.0) - 1.0
        if gap_variable is not None:
            coefficients[gap_variable] = coefficients.get(gap_variable, 0.0) - 1.0
        self.add_lower_constraint(coefficients, gap)

    def solve(self) -> LPResult:
        """
        Solves the program with the HiGHS solver.

        Raises:
            InternalError: The solver failed for another reason than
                infeasibility or unboundedness.
        """
        count = self.variable_count
        if count == 0:
            return LPResult(LPStatus.OPTIMAL, (), 0.0)
        if any(lower > upper for lower, upper in zip(self._lower, self._upper)):
            return LPResult(LPStatus.INFEASIBLE)

        matrix = None
        rhs = None
        if self._rhs:
            matrix = scipy.sparse.coo_matrix(
                (self._values, (self._rows, self._columns)),
                shape=(len(self._rhs), count),
            ).tocsr()
            rhs = np.array(self._rhs)
        bounds = [
            (None if math.isinf(lower) else lower, None if math.isinf(upper) else upper)
            for lower, upper in zip(self._lower, self._upper)
        ]
        _log.debug(
            "Solving an LP with %d variables and %d constraints.",
            count,
            len(self._rhs),
        )
        solution = scipy.optimize.linprog(
            np.array(self._costs),
            A_ub=matrix,
            b_ub=rhs,
            bounds=bounds,
            method="highs",
        )
        status = _STATUSES.get(solution.status)
        if status is None:
            raise InternalError(f"LP solver failed: {solution.message}")
        if status is not LPStatus.OPTIMAL:
            return LPResult(status)
        return LPResult(
            status,
            tuple(float(value) for value in solution.x),
            float(solution.fun),
        )


def solve_lp(program: LinearProgram) -> LPResult:
    """
    Solves a linear program.

    Infeasible and unbounded programs are reported through
    `LPResult.status` rather than raised.
    """
    return program.solve()
