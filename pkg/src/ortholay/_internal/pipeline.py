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

import contextlib
import logging
import math
import time
from typing import Any, Iterator, Mapping, NamedTuple, Optional, Sequence, Union, final

from .drawing import Drawing
from .enums import Axis, NudgeMode, PipelineMode
from .errors import InvalidArgument, OrtholayException, ParseError, PipelineError
from .geometry import Box, Point, box_from_label
from .graph import Multigraph
from .io import Instance
from .layout import LayoutConfig, force_layout, overlapping_pairs, remove_overlaps
from .metrics import DrawingMetrics, compute_metrics
from .nudging import DEFAULT_SCHEDULE, run_nudging_passes
from .ordering import order_paths, routes_from_paths
from .ports import PortAssignment, assign_ports
from .routing import EdgePath, reduce_crossings, route_edges
from .routing_graph import RoutingGraph, construct_routing_graph

__all__ = (
    "STAGES",
    "PipelineConfig",
    "PipelineResult",
    "parse_schedule",
    "run_pipeline",
)

_log = logging.getLogger(__name__)

#: The stages of a pipeline run, in order.
STAGES = (
    "force-directed",
    "overlap removal",
    "port assignment",
    "routing graph",
    "edge routing",
    "crossing reduction",
    "edge ordering",
    "edge nudging",
    "metrics",
)


def parse_schedule(value: Union[str, Sequence[Union[str, Axis]]]) -> tuple[Axis, ...]:
    """
    Parses a nudging schedule like ``"HVH"`` or ``["H", "V", "H"]``.

    Raises:
        InvalidArgument: The schedule is empty or has an unknown pass.
    """
    items = list(value.replace(",", "")) if isinstance(value, str) else list(value)
    schedule = []
    for item in items:
        if isinstance(item, Axis):
            schedule.append(item)
            continue
        try:
            schedule.append(Axis(str(item).upper()))
        except ValueError:
            raise InvalidArgument(f"Unknown nudging pass {item!r}, expected H or V.") from None
    if not schedule:
        raise InvalidArgument("The nudging schedule can't be empty.")
    return tuple(schedule)


@final
class PipelineConfig:
    """
    PipelineConfig(*, mode=None, delta_min=12, nudge_mode=NudgeMode.FULL, ...)

    The parameters of a pipeline run.

    Parameters:
        mode:
            Which stages to run. When not passed, the most complete mode
            the instance's geometry allows is used.
        delta_min: The minimum object distance, in pixels.
        nudge_mode: Whether nudging may move boxes and ports.
        passes: The axes of the nudging passes.
        seed: Seed of the force-directed layout.
        layout:
            Parameters of the force-directed layout and the overlap removal.
            Its seed is replaced by ``seed``.
        collapse_bends: Whether nudging may straighten Z-shapes of one route.
        per_char_width: The width of one label character.
        min_port_gap: The minimum distance between the ports on one box side.

    Raises:
        InvalidArgument: When a parameter is out of its range.
    """

    __slots__ = (
        "mode",
        "delta_min",
        "nudge_mode",
        "passes",
        "seed",
        "layout",
        "collapse_bends",
        "per_char_width",
        "min_port_gap",
    )

    def __init__(
        self,
        *,
        mode: Optional[PipelineMode] = None,
        delta_min: float = 12.0,
        nudge_mode: NudgeMode = NudgeMode.FULL,
        passes: Union[str, Sequence[Union[str, Axis]]] = DEFAULT_SCHEDULE,
        seed: int = 0,
        layout: Optional[LayoutConfig] = None,
        collapse_bends: bool = True,
        per_char_width: float = 8.0,
        min_port_gap: float = 18.0,
    ) -> None:
        if not math.isfinite(delta_min) or delta_min < 0:
            raise InvalidArgument("delta_min has to be a non-negative number.")
        if per_char_width < 0:
            raise InvalidArgument("per_char_width can't be negative.")
        if not min_port_gap > 0:
            raise InvalidArgument("min_port_gap has to be positive.")
        if layout is None:
            layout = LayoutConfig(seed=seed)
        elif layout.seed != seed:
            layout = LayoutConfig(
                iterations=layout.iterations,
                ideal_edge_length=layout.ideal_edge_length,
                cooling=layout.cooling,
                seed=seed,
                margin=layout.margin,
            )
        self.mode = mode
        self.delta_min = float(delta_min)
        self.nudge_mode = nudge_mode
        self.passes = parse_schedule(passes)
        self.seed = seed
        self.layout = layout
        self.collapse_bends = collapse_bends
        self.per_char_width = per_char_width
        self.min_port_gap = min_port_gap

    def __repr__(self) -> str:
        mode = None if self.mode is None else self.mode.value
        passes = "".join(axis.value for axis in self.passes)
        return (
            f"<{self.__class__.__name__} mode={mode} delta_min={self.delta_min}"
            f" nudge_mode={self.nudge_mode.value} passes={passes} seed={self.seed}>"
        )

    def replace(self, **changes: Any) -> PipelineConfig:
        """A copy with some parameters replaced."""
        values = {name: getattr(self, name) for name in self.__slots__}
        values.update(changes)
        return PipelineConfig(**values)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], **overrides: Any) -> PipelineConfig:
        """
        Creates a config from the ``config`` block of an instance document.

        Keyword arguments that aren't ``None`` take precedence over the block.

        Raises:
            ParseError: A key is unknown or its value is invalid.
        """
        layout_keys = ("iterations", "ideal_edge_length", "cooling", "margin")
        converters = {
            "mode": PipelineMode,
            "delta_min": float,
            "nudge": NudgeMode,
            "passes": parse_schedule,
            "seed": int,
            "collapse_bends": bool,
            "per_char_width": float,
            "min_port_gap": float,
            "iterations": int,
            "ideal_edge_length": float,
            "cooling": float,
            "margin": float,
        }
        values: dict[str, Any] = {}
        for key, raw in data.items():
            converter = converters.get(key)
            if converter is None:
                raise ParseError("unknown config key", location=f"config.{key}")
            try:
                values[key] = converter(raw)
            except (TypeError, ValueError) as exc:
                raise ParseError(
                    f"invalid value {raw!r} ({exc})", location=f"config.{key}"
                ) from None
        values.update((key, value) for key, value in overrides.items() if value is not None)
        if "nudge" in values:
            values["nudge_mode"] = values.pop("nudge")
        layout_values = {key: values.pop(key) for key in layout_keys if key in values}
        try:
            layout = LayoutConfig(seed=values.get("seed", 0), **layout_values)
            return cls(layout=layout, **values)
        except InvalidArgument as exc:
            raise ParseError(str(exc), location="config") from None


class PipelineResult(NamedTuple):
    """A finished drawing with its metrics and the wall-clock time of every stage."""

    drawing: Drawing
    metrics: DrawingMetrics
    timings: dict[str, float]

    @property
    def total_time(self) -> float:
        return sum(self.timings.values())


@contextlib.contextmanager
def _stage(name: str, timings: dict[str, float]) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    except PipelineError:
        raise
    except OrtholayException as exc:
        raise PipelineError(name, exc) from exc
    finally:
        elapsed = time.perf_counter() - start
        timings[name] = timings.get(name, 0.0) + elapsed
        _log.debug("Stage %r took %.4f s.", name, elapsed)


def _label_boxes(
    graph: Multigraph, positions: Mapping[str, Point], config: PipelineConfig
) -> dict[str, Box]:
    return {
        vertex.id: box_from_label(
            vertex.label,
            per_char_width=config.per_char_width,
            min_port_gap=config.min_port_gap,
            degree=graph.degree(vertex.id),
            center=positions.get(vertex.id, Point(0.0, 0.0)),
        )
        for vertex in graph.vertices.values()
    }


def _place_boxes(
    graph: Multigraph, mode: PipelineMode, config: PipelineConfig, timings: dict[str, float]
) -> dict[str, Box]:
    if mode is PipelineMode.FORCE:
        with _stage("force-directed", timings):
            sized = _label_boxes(graph, {}, config)
            positions = force_layout(graph.with_boxes(sized), config.layout)
            boxes = {
                vertex_id: box.moved_to(*positions[vertex_id]) for vertex_id, box in sized.items()
            }
        with _stage("overlap removal", timings):
            return remove_overlaps(boxes, config.layout.margin)

    given = {
        vertex.id: vertex.box for vertex in graph.vertices.values() if vertex.box is not None
    }
    positions = {
        vertex.id: vertex.position
        for vertex in graph.vertices.values()
        if vertex.position is not None
    }
    boxes = {**_label_boxes(graph, positions, config), **given}
    if overlapping_pairs(boxes):
        _log.warning("Supplied positions make boxes overlap, removing the overlaps.")
        with _stage("overlap removal", timings):
            boxes = remove_overlaps(boxes, config.layout.margin)
    return boxes


def _route(
    graph: Multigraph,
    boxes: Mapping[str, Box],
    config: PipelineConfig,
    timings: dict[str, float],
) -> Drawing:
    with _stage("port assignment", timings):
        ports = assign_ports(graph, boxes)
    with _stage("routing graph", timings):
        routing_graph = construct_routing_graph(
            graph, boxes, ports, delta_min=config.delta_min
        )
    with _stage("edge routing", timings):
        paths = route_edges(graph, routing_graph, ports)
    with _stage("crossing reduction", timings):
        paths = reduce_crossings(routing_graph, paths)
    with _stage("edge ordering", timings):
        bundle_order = order_paths(routing_graph, paths)
        routes = routes_from_paths(routing_graph, paths)
    return Drawing(
        graph.with_boxes(boxes),
        boxes,
        routes,
        ports=ports,
        routing_graph=routing_graph,
        bundle_order=bundle_order,
    )


def _given_routing(
    graph: Multigraph, paths: Mapping[str, Sequence[Point]], timings: dict[str, float]
) -> Drawing:
    boxes = {vertex.id: vertex.box for vertex in graph.vertices.values() if vertex.box is not None}
    with _stage("edge ordering", timings):
        positions = {}
        for edge_id in graph.edges:
            polyline = paths[edge_id]
            positions[edge_id, 0] = polyline[0]
            positions[edge_id, 1] = polyline[-1]
        ports = PortAssignment.from_positions(graph, boxes, positions)
        routing_graph = RoutingGraph.from_polylines(
            {edge_id: paths[edge_id] for edge_id in graph.edges}, ports
        )
        edge_paths = {
            edge_id: EdgePath(edge_id, tuple(routing_graph.trace(paths[edge_id])))
            for edge_id in graph.edges
        }
        bundle_order = order_paths(routing_graph, edge_paths)
        routes = routes_from_paths(routing_graph, edge_paths)
    return Drawing(
        graph,
        boxes,
        routes,
        ports=ports,
        routing_graph=routing_graph,
        bundle_order=bundle_order,
    )


def run_pipeline(instance: Instance, config: Optional[PipelineConfig] = None) -> PipelineResult:
    """
    Lays out an instance.

    In ``force`` mode the vertices are placed by a force-directed layout
    followed by overlap removal; in ``given-positions`` mode the supplied
    boxes and positions are used instead. Both then assign ports, build the
    routing graph, route the edges, reduce crossings and order the paths.
    In ``given-routing`` mode the supplied routes are only ordered. All
    modes finish with nudging and the metrics.

    Only the largest connected component of a disconnected graph is drawn.

    Parameters:
        instance: The instance to lay out.
        config: The parameters of the run.

    Raises:
        InvalidArgument: The mode needs geometry the instance doesn't have.
        PipelineError: A stage failed. Its ``stage`` and ``cause`` tell which and why.
    """
    if config is None:
        config = PipelineConfig()
    mode = instance.mode if config.mode is None else config.mode
    if mode is PipelineMode.GIVEN_ROUTING and instance.paths is None:
        raise InvalidArgument("The given-routing mode needs an instance with paths.")
    if mode is PipelineMode.GIVEN_POSITIONS and instance.mode is PipelineMode.FORCE:
        raise InvalidArgument("The given-positions mode needs an instance with positions.")
    if instance.graph.n == 0:
        raise InvalidArgument("Can't lay out an empty graph.")

    graph = instance.graph.largest_component()
    timings: dict[str, float] = {}
    if mode is PipelineMode.GIVEN_ROUTING:
        assert instance.paths is not None
        drawing = _given_routing(graph, instance.paths, timings)
    else:
        boxes = _place_boxes(graph, mode, config, timings)
        drawing = _route(graph, boxes, config, timings)

    with _stage("edge nudging", timings):
        drawing = run_nudging_passes(
            drawing,
            mode=config.nudge_mode,
            delta_min=config.delta_min,
            schedule=config.passes,
            collapse_bends=config.collapse_bends,
        )
        drawing = drawing.replace(graph=drawing.graph.with_boxes(drawing.boxes))
    with _stage("metrics", timings):
        metrics = compute_metrics(drawing)
    _log.debug("Pipeline finished in %.4f s: %s", sum(timings.values()), metrics)
    return PipelineResult(drawing, metrics, timings)
