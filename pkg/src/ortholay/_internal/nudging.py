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

import bisect
import itertools
import logging
import math
from typing import Mapping, NamedTuple, Optional, Sequence, final

import networkx as nx

from .drawing import Drawing, Route
from .enums import Axis, Direction, NudgeMode, ObjectKind, Side
from .errors import InternalError, InvalidArgument
from .geometry import Box, Interval, Point
from .layout import overlapping_pairs
from .lp import LinearProgram, solve_lp
from .ordering import BundleOrder, join_collinear
from .utils import EPS, snap

__all__ = (
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
    "DEFAULT_SCHEDULE",
    "MAX_SCHEDULE_ROUNDS",
)

_log = logging.getLogger(__name__)

#: Horizontal, vertical and once more horizontal.
DEFAULT_SCHEDULE = (Axis.X, Axis.Y, Axis.X)
#: How often the schedule is repeated at most while it still moves the drawing.
MAX_SCHEDULE_ROUNDS = 4
#: Bounds margin of the dummy bars when the minimum object distance is 0.
DEFAULT_DUMMY_MARGIN = 24.0

_ALPHA = "alpha"
_OMEGA = "omega"
_KIND_CLASS = {
    ObjectKind.BOX_HIGH: 0,
    ObjectKind.SEGMENT: 1,
    ObjectKind.BOX_LOW: 2,
}


class NudgeObject(NamedTuple):
    """
    An object taking part in a nudging pass.

    ``coordinate`` is the position along the pass axis, ``extent`` the
    (possibly padded) extent along the other axis and ``span`` the unpadded
    one. ``owner`` is the edge id of a segment, the vertex id of a box side
    or ``alpha``/``omega`` for the dummy bars.
    """

    kind: ObjectKind
    coordinate: float
    extent: Interval
    span: Interval
    movable: bool
    owner: str
    segment: int = -1
    direction: Optional[Direction] = None
    is_port_segment: bool = False

    @property
    def is_barrier(self) -> bool:
        return self.kind is not ObjectKind.SEGMENT or self.is_port_segment

    @property
    def key(self) -> tuple[str, str, int]:
        return (self.kind.value, self.owner, self.segment)


@final
class OrderChi:
    """
    OrderChi()

    The objects of one nudging pass in their order along the pass axis.

    The leading dummy bar comes first and the trailing one last.
    """

    __slots__ = ("axis", "mode", "delta_min", "objects", "positions", "minimum_sizes")

    def __init__(
        self,
        axis: Axis,
        objects: Sequence[NudgeObject],
        *,
        mode: NudgeMode,
        delta_min: float,
        minimum_sizes: Optional[Mapping[str, float]] = None,
    ) -> None:
        self.axis = axis
        self.minimum_sizes = dict(minimum_sizes or {})
        self.mode = mode
        self.delta_min = delta_min
        self.objects = list(objects)
        self.positions = {obj.key: index for index, obj in enumerate(self.objects)}

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} axis={self.axis.name} objects={len(self)}>"

    def __len__(self) -> int:
        return len(self.objects)

    def __getitem__(self, index: int) -> NudgeObject:
        return self.objects[index]

    def segment_position(self, edge_id: str, segment: int) -> Optional[int]:
        return self.positions.get((ObjectKind.SEGMENT.value, edge_id, segment))

    def box_position(self, vertex_id: str, kind: ObjectKind) -> int:
        return self.positions[kind.value, vertex_id, -1]


class Separation(NamedTuple):
    """
    The constraint ``x[high] - x[low] ≥ gap`` (plus ``δ`` when ``variable`` is set).

    ``low`` and ``high`` are positions in the order; ``variable`` is the index
    of the shared distance variable of the arc's component.
    """

    low: int
    high: int
    gap: float = 0.0
    variable: Optional[int] = None


class ConstraintArc(NamedTuple):
    """A solved constraint graph arc, for drawing debug overlays."""

    axis: Axis
    start: Point
    end: Point
    shared: bool


@final
class ConstraintProblem:
    """
    ConstraintProblem()

    The constraint graph of a pass and, once simplified, the separation
    constraints derived from it.

    Attributes:
        chi: The ordered objects.
        arcs: The arcs of the constraint graph, as pairs of positions.
        separations: The separation constraints.
        widths: ``(low side, high side, minimum size)`` for every box (full mode).
        gap_count: The number of distance variables.
    """

    __slots__ = ("chi", "arcs", "separations", "widths", "gap_count")

    def __init__(
        self,
        chi: OrderChi,
        arcs: Sequence[tuple[int, int]],
        *,
        separations: Sequence[Separation] = (),
        widths: Sequence[tuple[int, int, float]] = (),
        gap_count: int = 0,
    ) -> None:
        self.chi = chi
        self.arcs = sorted(arcs)
        self.separations = list(separations)
        self.widths = list(widths)
        self.gap_count = gap_count

    def __repr__(self) -> str:
        return (
            f"<{self.__class__.__name__} objects={len(self.chi)} arcs={len(self.arcs)}"
            f" separations={len(self.separations)} gaps={self.gap_count}>"
        )

    @property
    def object_count(self) -> int:
        return len(self.chi)


class NudgeResult(NamedTuple):
    """Solved coordinates (in order position) and distance variable values."""

    coordinates: tuple[float, ...]
    gaps: tuple[float, ...]
    objective: float


def _positive(axis: Axis) -> Direction:
    return Direction.EAST if axis is Axis.X else Direction.NORTH


def _continuation(route: Route, segment: int, at_high_end: bool, axis: Axis) -> Optional[Direction]:
    """The direction the route leaves a segment in at one of its ends."""
    other = 1 - axis.index
    start, end = route.points[segment], route.points[segment + 1]
    end_is_high = end[other] >= start[other]
    if at_high_end == end_is_high:
        if segment + 1 < route.segment_count:
            return route.direction(segment + 1)
        return None
    if segment >= 1:
        return route.direction(segment - 1).opposite
    return None


def _colocated_order(
    group: list[NudgeObject],
    routes: Mapping[str, Route],
    axis: Axis,
    bundle_order: Optional[BundleOrder],
) -> list[NudgeObject]:
    if len(group) < 2:
        return group
    graph = nx.DiGraph()
    nodes = {(obj.owner, obj.segment): obj for obj in group}
    graph.add_nodes_from(nodes)
    positive = _positive(axis)
    for a, b in itertools.combinations(group, 2):
        node_a, node_b = (a.owner, a.segment), (b.owner, b.segment)
        shared = routes[a.owner].edges_of(a.segment) & routes[b.owner].edges_of(b.segment)
        if shared and bundle_order is not None:
            edge_id = min(shared)
            order = bundle_order.orders.get(edge_id, ())
            if a.owner in order and b.owner in order:
                earlier = bundle_order.position(edge_id, a.owner) < bundle_order.position(
                    edge_id, b.owner
                )
                # bundles list horizontal edges from top to bottom
                if axis is Axis.Y:
                    earlier = not earlier
                graph.add_edge(*((node_a, node_b) if earlier else (node_b, node_a)))
                continue
        if abs(a.span.hi - b.span.lo) <= EPS:
            lower, upper = a, b
        elif abs(b.span.hi - a.span.lo) <= EPS:
            lower, upper = b, a
        else:
            continue
        lower_turn = _continuation(routes[lower.owner], lower.segment, True, axis)
        upper_turn = _continuation(routes[upper.owner], upper.segment, False, axis)
        if lower_turn is None or upper_turn is None or lower_turn is upper_turn:
            continue
        node_lower, node_upper = (lower.owner, lower.segment), (upper.owner, upper.segment)
        if lower_turn is positive:
            graph.add_edge(node_upper, node_lower)
        elif upper_turn is positive:
            graph.add_edge(node_lower, node_upper)
    try:
        ordered = list(nx.lexicographical_topological_sort(graph))
    except nx.NetworkXUnfeasible:
        _log.warning(
            "Inconsistent order of %d co-located segments, ordering them by edge id.",
            len(group),
        )
        ordered = sorted(nodes)
    return [nodes[node] for node in ordered]


def _dummy_bounds(
    routes: Mapping[str, Route], boxes: Mapping[str, Box], axis: Axis, delta_min: float
) -> Interval:
    coordinates = [point[axis.index] for route in routes.values() for point in route.points]
    for box in boxes.values():
        span = box.span(axis)
        coordinates.extend((span.lo, span.hi))
    if not coordinates:
        raise InvalidArgument("Can't nudge an empty drawing.")
    margin = 2 * delta_min if delta_min > 0 else DEFAULT_DUMMY_MARGIN
    return Interval(min(coordinates) - margin, max(coordinates) + margin)


def build_order_chi(
    routes: Mapping[str, Route],
    boxes: Mapping[str, Box],
    axis: Axis,
    *,
    bundle_order: Optional[BundleOrder] = None,
    mode: NudgeMode = NudgeMode.CONSTRAINED,
    delta_min: float = 0.0,
    bounds: Optional[Interval] = None,
) -> OrderChi:
    """
    Collects and orders the objects of a nudging pass along ``axis``.

    Objects are the route segments perpendicular to ``axis``, the two box
    sides perpendicular to it and two dummy bars enclosing everything.
    They are ordered by coordinate; at equal coordinates the high sides of
    boxes come first and their low sides last. Co-located segments follow
    the bundle order of the routing graph edges they share, otherwise the
    direction they turn in at a common end point, then edge id.

    Raises:
        InvalidArgument: Two boxes overlap.
    """
    overlaps = overlapping_pairs(boxes)
    if overlaps:
        first, second = overlaps[0]
        raise InvalidArgument(f"Boxes of {first!r} and {second!r} overlap.")
    if bounds is None:
        bounds = _dummy_bounds(routes, boxes, axis, delta_min)
    full = mode is NudgeMode.FULL
    padding = delta_min / 2 if full else 0.0
    other = Axis.Y if axis is Axis.X else Axis.X

    objects: list[NudgeObject] = []
    for edge_id in sorted(routes):
        route = routes[edge_id]
        last = route.segment_count - 1
        for index in range(route.segment_count):
            start, end = route.points[index], route.points[index + 1]
            if abs(start[axis.index] - end[axis.index]) > EPS:
                continue
            if abs(start[other.index] - end[other.index]) <= EPS:
                continue
            span = Interval(*sorted((start[other.index], end[other.index])))
            is_port_segment = index == 0 or index == last
            objects.append(
                NudgeObject(
                    ObjectKind.SEGMENT,
                    start[axis.index],
                    span.padded(padding),
                    span,
                    full or not is_port_segment,
                    edge_id,
                    index,
                    route.direction(index),
                    is_port_segment,
                )
            )
    for vertex_id in sorted(boxes):
        box = boxes[vertex_id]
        span = box.span(other)
        sides = box.span(axis)
        for kind, coordinate in ((ObjectKind.BOX_LOW, sides.lo), (ObjectKind.BOX_HIGH, sides.hi)):
            objects.append(
                NudgeObject(kind, coordinate, span.padded(padding), span, full, vertex_id)
            )

    objects.sort(
        key=lambda obj: (snap(obj.coordinate), _KIND_CLASS[obj.kind], obj.owner, obj.segment)
    )
    ordered: list[NudgeObject] = []
    for _, group in itertools.groupby(
        objects, key=lambda obj: (snap(obj.coordinate), _KIND_CLASS[obj.kind])
    ):
        members = list(group)
        if members[0].kind is ObjectKind.SEGMENT:
            members = _colocated_order(members, routes, axis, bundle_order)
        ordered.extend(members)

    everywhere = Interval(-math.inf, math.inf)
    alpha = NudgeObject(ObjectKind.DUMMY_LOW, bounds.lo, everywhere, everywhere, not full, _ALPHA)
    omega = NudgeObject(ObjectKind.DUMMY_HIGH, bounds.hi, everywhere, everywhere, True, _OMEGA)
    minimum_sizes = {
        vertex_id: box.original_width if axis is Axis.X else box.original_height
        for vertex_id, box in boxes.items()
    }
    return OrderChi(
        axis,
        [alpha, *ordered, omega],
        mode=mode,
        delta_min=delta_min,
        minimum_sizes=minimum_sizes,
    )


def build_constraint_graph(chi: OrderChi) -> ConstraintProblem:
    """
    Builds the constraint graph of an ordered set of objects.

    There is an arc from ``u`` to a later object ``v`` if their extents share a
    coordinate at which no object between them is present. A sweep over the
    extents keeps the present objects in order; arcs are recorded between
    neighbours when objects enter and when objects leave.
    """
    events: dict[float, tuple[list[int], list[int]]] = {}
    for position, obj in enumerate(chi.objects):
        events.setdefault(_event_key(obj.extent.lo), ([], []))[0].append(position)
        events.setdefault(_event_key(obj.extent.hi), ([], []))[1].append(position)

    active: list[int] = []
    arcs: set[tuple[int, int]] = set()
    for key in sorted(events):
        opening, closing = events[key]
        for position in opening:
            bisect.insort(active, position)
        for position in opening:
            index = bisect.bisect_left(active, position)
            if index > 0:
                arcs.add((active[index - 1], position))
            if index + 1 < len(active):
                arcs.add((position, active[index + 1]))
        for position in closing:
            del active[bisect.bisect_left(active, position)]
        for position in closing:
            index = bisect.bisect_left(active, position)
            if 0 < index < len(active):
                arcs.add((active[index - 1], active[index]))
    _log.debug("Constraint graph has %d arcs for %d objects.", len(arcs), len(chi))
    return ConstraintProblem(chi, sorted(arcs))


def _event_key(value: float) -> float:
    return value if math.isinf(value) else snap(value)


def _is_z_pair(first: NudgeObject, second: NudgeObject) -> bool:
    return (
        first.kind is ObjectKind.SEGMENT
        and second.kind is ObjectKind.SEGMENT
        and first.owner == second.owner
        and abs(first.segment - second.segment) == 2
        and first.direction is second.direction
    )


def _same_box(first: NudgeObject, second: NudgeObject) -> bool:
    return first.kind.is_box_side and second.kind.is_box_side and first.owner == second.owner


def simplify_constraints(
    problem: ConstraintProblem, *, collapse_bends: bool = True
) -> ConstraintProblem:
    """
    Derives the separation constraints of a constraint graph.

    Arcs implied by two other arcs are dropped. The remaining arcs between
    movable objects share one distance variable per group of movable
    segments connected without passing a barrier (a box side, a port
    segment or a dummy bar). Arcs between two fixed objects are dropped and
    arcs from or to a dummy bar between barriers only keep the order.
    With ``collapse_bends``, two segments of one route that are separated by
    a single perpendicular segment and run in the same direction may end
    up collinear.

    In full mode every arc additionally separates its objects by the minimum
    object distance and the sides of every box keep its original size.

    Raises:
        InternalError: The constraint graph has a cycle.
    """
    chi = problem.chi
    objects = chi.objects
    graph = nx.DiGraph(problem.arcs)
    if not nx.is_directed_acyclic_graph(graph):
        raise InternalError("The constraint graph has a cycle.")

    successors: dict[int, set[int]] = {}
    for low, high in problem.arcs:
        successors.setdefault(low, set()).add(high)
    reduced = [
        (low, high)
        for low, high in problem.arcs
        if not any(high in successors.get(middle, ()) for middle in successors[low])
    ]

    components = nx.Graph()
    components.add_nodes_from(
        position for position, obj in enumerate(objects) if not obj.is_barrier
    )
    components.add_edges_from(
        (low, high)
        for low, high in reduced
        if not objects[low].is_barrier and not objects[high].is_barrier
    )
    component_of = {
        position: index
        for index, members in enumerate(nx.connected_components(components))
        for position in members
    }
    variables: dict[object, int] = {}

    def variable_for(key: object) -> int:
        return variables.setdefault(key, len(variables))

    separations: list[Separation] = []
    for low, high in reduced:
        first, second = objects[low], objects[high]
        if not (first.movable or second.movable) or _same_box(first, second):
            continue
        if collapse_bends and _is_z_pair(first, second):
            separations.append(Separation(low, high))
            continue
        if first.is_barrier and second.is_barrier:
            if first.kind.is_dummy or second.kind.is_dummy:
                separations.append(Separation(low, high))
                continue
            variable = variable_for(("arc", low, high))
        else:
            member = high if first.is_barrier else low
            variable = variable_for(("component", component_of[member]))
        separations.append(Separation(low, high, 0.0, variable))

    widths: list[tuple[int, int, float]] = []
    if chi.mode is NudgeMode.FULL:
        for low, high in problem.arcs:
            first, second = objects[low], objects[high]
            if _same_box(first, second) or (collapse_bends and _is_z_pair(first, second)):
                continue
            separations.append(Separation(low, high, chi.delta_min))
        for position, obj in enumerate(objects):
            if obj.kind is ObjectKind.BOX_LOW:
                high = chi.box_position(obj.owner, ObjectKind.BOX_HIGH)
                widths.append((position, high, chi.minimum_sizes[obj.owner]))

    _log.debug(
        "Simplified %d arcs to %d separations with %d distance variables.",
        len(problem.arcs),
        len(separations),
        len(variables),
    )
    return ConstraintProblem(
        chi, problem.arcs, separations=separations, widths=widths, gap_count=len(variables)
    )


def _port_side(box: Box, point: Point) -> Optional[Side]:
    return box.side_of(point)


def _side_kind(side: Side, axis: Axis) -> Optional[ObjectKind]:
    if side.orientation is not axis.moving_orientation:
        return None
    if side in (Side.EAST, Side.NORTH):
        return ObjectKind.BOX_HIGH
    return ObjectKind.BOX_LOW


def _endpoint_position(
    drawing: Drawing, chi: OrderChi, edge_id: str, point_index: int
) -> Optional[int]:
    """The order position of the object an end point of a perpendicular segment lies on."""
    route = drawing.routes[edge_id]
    last = len(route.points) - 1
    if 0 < point_index < last:
        for segment in (point_index - 1, point_index):
            position = chi.segment_position(edge_id, segment)
            if position is not None:
                return position
        return None
    edge = drawing.graph.edges[edge_id]
    vertex_id = edge.source if point_index == 0 else edge.target
    side = _port_side(drawing.boxes[vertex_id], route.points[point_index])
    if side is None:
        return None
    kind = _side_kind(side, chi.axis)
    if kind is None:
        return None
    return chi.box_position(vertex_id, kind)


def _geometry_key(drawing: Drawing) -> tuple[object, ...]:
    routes = tuple(
        (edge_id, tuple((snap(point.x), snap(point.y)) for point in route.points))
        for edge_id, route in sorted(drawing.routes.items())
    )
    boxes = tuple(
        (vertex_id, snap(box.left), snap(box.right), snap(box.bottom), snap(box.top))
        for vertex_id, box in sorted(drawing.boxes.items())
    )
    return routes, boxes


def _perpendicular_links(drawing: Drawing, chi: OrderChi) -> list[tuple[int, int]]:
    """The objects at both ends of every segment running along the pass axis."""
    links = []
    for edge_id in sorted(drawing.routes):
        route = drawing.routes[edge_id]
        for index in range(route.segment_count):
            if chi.segment_position(edge_id, index) is not None:
                continue
            start = _endpoint_position(drawing, chi, edge_id, index)
            end = _endpoint_position(drawing, chi, edge_id, index + 1)
            if start is not None and end is not None and start != end:
                links.append((start, end))
    return links


def nudge(
    problem: ConstraintProblem, *, lengths: Sequence[tuple[int, int]] = ()
) -> NudgeResult:
    """
    Solves the separation constraints of a simplified problem.

    In constrained mode fixed objects keep their coordinates and the
    objective is ``|W|·(ω - α) - Σδ`` over the distance variables ``W``. In
    full mode only the leading dummy bar is fixed and the objective is
    ``C·(ω + Σ box sizes) + 2·Σ lengths - Σδ`` with ``C = 2·(|W| + |lengths|)``,
    where ``lengths`` pairs the objects at both ends of each segment running
    along the pass axis.

    Raises:
        InternalError: The program is infeasible or unbounded.
    """
    chi = problem.chi
    program = LinearProgram()
    for obj in chi.objects:
        if obj.movable:
            program.add_variable(f"{obj.kind.value}:{obj.owner}:{obj.segment}")
        else:
            program.fix(program.add_variable(obj.kind.value), obj.coordinate)
    alpha, omega = 0, len(chi) - 1
    gaps = [
        program.add_variable(f"delta{index}", lower=0.0, cost=-1.0)
        for index in range(problem.gap_count)
    ]

    if chi.mode is NudgeMode.CONSTRAINED:
        program.add_cost(omega, problem.gap_count)
        program.add_cost(alpha, -problem.gap_count)
    else:
        weight = 2.0 * (problem.gap_count + len(lengths))
        program.add_cost(omega, weight)
        for low, high, _ in problem.widths:
            program.add_cost(high, weight)
            program.add_cost(low, -weight)
        for start, end in lengths:
            length = program.add_variable("length", lower=0.0, cost=2.0)
            program.add_lower_constraint({length: 1.0, end: -1.0, start: 1.0}, 0.0)
            program.add_lower_constraint({length: 1.0, start: -1.0, end: 1.0}, 0.0)

    for separation in problem.separations:
        program.add_difference_constraint(
            separation.low,
            separation.high,
            gap=separation.gap,
            gap_variable=None if separation.variable is None else gaps[separation.variable],
        )
    for low, high, size in problem.widths:
        program.add_difference_constraint(low, high, gap=size)

    _log.debug(
        "Solving %s pass with %d variables and %d constraints.",
        chi.axis.name,
        program.variable_count,
        program.constraint_count,
    )
    result = solve_lp(program)
    if not result.is_optimal:
        raise InternalError(f"The {chi.axis.name} nudging program is {result.status.value}.")
    coordinates = tuple(result.value(index) for index in range(len(chi)))
    return NudgeResult(
        coordinates,
        tuple(result.value(gap) for gap in gaps),
        0.0 if result.objective is None else result.objective,
    )


def apply_nudge(drawing: Drawing, chi: OrderChi, result: NudgeResult) -> Drawing:
    """Moves the segments, box sides and ports of a drawing to solved coordinates."""
    axis = chi.axis
    index = axis.index
    points = {
        edge_id: [list(point) for point in route.points]
        for edge_id, route in drawing.routes.items()
    }

    # ports follow their box side, segments override them where both apply
    for edge_id, route in drawing.routes.items():
        edge = drawing.graph.edges[edge_id]
        for point_index, vertex_id in ((0, edge.source), (len(route.points) - 1, edge.target)):
            side = _port_side(drawing.boxes[vertex_id], route.points[point_index])
            kind = None if side is None else _side_kind(side, axis)
            if kind is not None:
                position = chi.box_position(vertex_id, kind)
                points[edge_id][point_index][index] = result.coordinates[position]
    for position, obj in enumerate(chi.objects):
        if obj.kind is ObjectKind.SEGMENT:
            coordinate = result.coordinates[position]
            points[obj.owner][obj.segment][index] = coordinate
            points[obj.owner][obj.segment + 1][index] = coordinate

    boxes = dict(drawing.boxes)
    if chi.mode is NudgeMode.FULL:
        for vertex_id, box in drawing.boxes.items():
            low = result.coordinates[chi.box_position(vertex_id, ObjectKind.BOX_LOW)]
            high = result.coordinates[chi.box_position(vertex_id, ObjectKind.BOX_HIGH)]
            if axis is Axis.X:
                left, right, bottom, top = low, high, box.bottom, box.top
            else:
                left, right, bottom, top = box.left, box.right, low, high
            boxes[vertex_id] = Box.from_sides(
                left,
                right,
                bottom,
                top,
                original_width=box.original_width,
                original_height=box.original_height,
            )

    routes = {
        edge_id: route._replace(points=tuple(Point(x, y) for x, y in points[edge_id]))
        for edge_id, route in drawing.routes.items()
    }
    return drawing.replace(boxes=boxes, routes=routes)


def _debug_arcs(problem: ConstraintProblem, result: NudgeResult) -> list[ConstraintArc]:
    arcs = []
    axis = problem.chi.axis
    seen = set()
    for separation in problem.separations:
        key = (separation.low, separation.high)
        if key in seen:
            continue
        seen.add(key)
        first, second = problem.chi[separation.low], problem.chi[separation.high]
        common = first.extent.intersection(second.extent)
        if common is None or (math.isinf(common.lo) and math.isinf(common.hi)):
            continue
        if math.isinf(common.lo) or math.isinf(common.hi):
            across = common.hi if math.isinf(common.lo) else common.lo
        else:
            across = common.middle
        start = result.coordinates[separation.low]
        end = result.coordinates[separation.high]
        shared = separation.variable is not None
        if axis is Axis.X:
            arcs.append(ConstraintArc(axis, Point(start, across), Point(end, across), shared))
        else:
            arcs.append(ConstraintArc(axis, Point(across, start), Point(across, end), shared))
    return arcs


def run_nudging_passes(
    drawing: Drawing,
    *,
    mode: NudgeMode = NudgeMode.FULL,
    delta_min: float = 12.0,
    schedule: Sequence[Axis] = DEFAULT_SCHEDULE,
    collapse_bends: bool = True,
) -> Drawing:
    """
    Spreads the routes of a drawing apart in a sequence of passes.

    Each pass orders the objects perpendicular to its axis, builds and
    simplifies their constraint graph, solves it and moves the objects.
    Collinear segments are joined after every pass. The schedule is
    repeated until a round leaves the drawing unchanged, so nudging a
    nudged drawing again keeps it as it is.

    Parameters:
        drawing: A drawing with routed edges and, ideally, a bundle order.
        mode: Whether boxes and ports may move.
        delta_min: The minimum object distance (full mode).
        schedule: The axes of the passes, in order.
        collapse_bends: Whether Z-shapes of one route may become straight.

    Raises:
        InvalidArgument: The schedule is empty or ``delta_min`` is negative.
        InternalError: A program can't be solved.
    """
    if not schedule:
        raise InvalidArgument("The nudging schedule can't be empty.")
    if delta_min < 0 or not math.isfinite(delta_min):
        raise InvalidArgument("delta_min has to be a non-negative number.")

    current = drawing.replace(routes=join_collinear(drawing.routes))
    arcs: list[ConstraintArc] = []
    for round_number in range(1, MAX_SCHEDULE_ROUNDS + 1):
        before = _geometry_key(current)
        arcs = []
        for axis in schedule:
            chi = build_order_chi(
                current.routes,
                current.boxes,
                axis,
                bundle_order=current.bundle_order,
                mode=mode,
                delta_min=delta_min,
            )
            problem = simplify_constraints(
                build_constraint_graph(chi), collapse_bends=collapse_bends
            )
            lengths = _perpendicular_links(current, chi) if mode is NudgeMode.FULL else ()
            result = nudge(problem, lengths=lengths)
            arcs.extend(_debug_arcs(problem, result))
            current = apply_nudge(current, chi, result)
            current = current.replace(routes=join_collinear(current.routes))
        if _geometry_key(current) == before:
            break
        _log.debug("Nudging round %d moved the drawing, repeating the schedule.", round_number)
    else:
        _log.warning(
            "Nudging did not settle after %d rounds of the schedule.", MAX_SCHEDULE_ROUNDS
        )
    return current.replace(constraint_arcs=arcs)
