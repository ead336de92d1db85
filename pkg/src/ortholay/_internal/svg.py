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

from typing import NamedTuple, Optional

import drawsvg as draw

from .bit_fields import DebugLayers
from .drawing import Drawing
from .geometry import Point, Rect

__all__ = ("SvgStyle", "DEFAULT_STYLE", "render_drawing", "emit_svg")


class SvgStyle(NamedTuple):
    """Colours and sizes of a rendered drawing."""

    padding: float = 20.0
    box_fill: str = "#f8fafc"
    box_stroke: str = "#334155"
    text_color: str = "#1e293b"
    font_size: float = 12.0
    font_family: str = "monospace"
    edge_stroke: str = "#2563eb"
    edge_width: float = 1.5
    channel_fill: str = "#fde68a"
    representative_stroke: str = "#f97316"
    routing_graph_stroke: str = "#a3a3a3"
    constraint_arc_stroke: str = "#dc2626"


DEFAULT_STYLE = SvgStyle()


class _Canvas:
    """Maps drawing coordinates (y up) to SVG coordinates (y down)."""

    __slots__ = ("rect", "padding")

    def __init__(self, rect: Rect, padding: float) -> None:
        self.rect = rect
        self.padding = padding

    @property
    def width(self) -> float:
        return self.rect.width + 2 * self.padding

    @property
    def height(self) -> float:
        return self.rect.height + 2 * self.padding

    def x(self, value: float) -> float:
        return round(value - self.rect.x0 + self.padding, 3)

    def y(self, value: float) -> float:
        return round(self.rect.y1 - value + self.padding, 3)

    def point(self, point: Point) -> tuple[float, float]:
        return (self.x(point.x), self.y(point.y))

    def rectangle(self, rect: Rect, **attributes: object) -> draw.Rectangle:
        return draw.Rectangle(
            self.x(rect.x0),
            self.y(rect.y1),
            round(rect.width, 3),
            round(rect.height, 3),
            **attributes,
        )


def _lines(canvas: _Canvas, points: list[Point], **attributes: object) -> draw.Lines:
    coordinates = [value for point in points for value in canvas.point(point)]
    return draw.Lines(*coordinates, close=False, fill="none", **attributes)


def _debug_layers(
    d: draw.Drawing, canvas: _Canvas, drawing: Drawing, layers: DebugLayers, style: SvgStyle
) -> None:
    graph = drawing.routing_graph
    if layers.channels and graph is not None:
        group = draw.Group(id="channels", opacity=0.4)
        for channel in graph.channels:
            group.append(canvas.rectangle(channel.rect, fill=style.channel_fill, stroke="none"))
        d.append(group)
    if layers.routing_graph and graph is not None:
        group = draw.Group(id="routing-graph", stroke=style.routing_graph_stroke, stroke_width=0.5)
        for a, b in graph.edges:
            group.append(draw.Line(*canvas.point(graph.points[a]), *canvas.point(graph.points[b])))
        d.append(group)
    if layers.representatives and graph is not None:
        group = draw.Group(id="representatives", stroke=style.representative_stroke)
        for representative in graph.representatives:
            segment = representative.segment
            group.append(
                draw.Line(
                    *canvas.point(segment.start),
                    *canvas.point(segment.end),
                    stroke_dasharray="4,2",
                )
            )
        d.append(group)
    if layers.constraint_arcs:
        group = draw.Group(id="constraint-arcs", stroke=style.constraint_arc_stroke)
        for arc in drawing.constraint_arcs:
            group.append(
                draw.Line(
                    *canvas.point(arc.start),
                    *canvas.point(arc.end),
                    stroke_width=1.0 if arc.shared else 0.5,
                )
            )
        d.append(group)


def render_drawing(
    drawing: Drawing,
    *,
    debug_layers: Optional[DebugLayers] = None,
    style: SvgStyle = DEFAULT_STYLE,
) -> draw.Drawing:
    """
    Renders a drawing.

    Boxes are drawn as rectangles with their label centred in them, routes
    as polylines on top. Debug layers are drawn between the two.
    """
    canvas = _Canvas(drawing.bounding_rect(), style.padding)
    d = draw.Drawing(round(canvas.width, 3), round(canvas.height, 3))

    for vertex_id in sorted(drawing.boxes):
        box = drawing.boxes[vertex_id]
        d.append(
            canvas.rectangle(
                box.rect, fill=style.box_fill, stroke=style.box_stroke, stroke_width=1
            )
        )
        vertex = drawing.graph.vertices.get(vertex_id)
        label = vertex.label if vertex is not None and vertex.label is not None else vertex_id
        d.append(
            draw.Text(
                label,
                style.font_size,
                *canvas.point(box.center),
                fill=style.text_color,
                font_family=style.font_family,
                text_anchor="middle",
                dominant_baseline="middle",
            )
        )

    if debug_layers:
        _debug_layers(d, canvas, drawing, debug_layers, style)

    for edge_id in sorted(drawing.routes):
        route = drawing.routes[edge_id]
        d.append(
            _lines(
                canvas,
                list(route.points),
                stroke=style.edge_stroke,
                stroke_width=style.edge_width,
            )
        )
    return d


def emit_svg(
    drawing: Drawing,
    *,
    debug_layers: Optional[DebugLayers] = None,
    style: SvgStyle = DEFAULT_STYLE,
) -> str:
    """
    Renders a drawing as an SVG document.

    The output only depends on the drawing, so rendering the same drawing
    twice gives identical documents.

    Parameters:
        drawing: The drawing to render.
        debug_layers: The intermediate results to overlay.
        style: Colours and sizes.

    Returns:
        The document.
    """
    return render_drawing(drawing, debug_layers=debug_layers, style=style).as_svg()
