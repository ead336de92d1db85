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

"""Instance document models"""

from __future__ import annotations

import math
from typing import Any, Optional, Union

from ..geometry import Box, Point
from .bases import Model, ParserData, field

__all__ = ("BoxData", "VertexData", "EdgeData", "InstanceData")


def _number(parser_data: ParserData, value: Any, *extra: Union[str, int]) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise parser_data.error("expected a number", *extra)
    if not math.isfinite(value):
        raise parser_data.error("expected a finite number", *extra)
    return float(value)


def _identifier(parser_data: ParserData) -> str:
    value = parser_data.get_field()
    if not isinstance(value, str) or not value:
        raise parser_data.error("expected a non-empty string")
    return value


def _point(parser_data: ParserData, value: Any, *extra: Union[str, int]) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise parser_data.error("expected a point [x, y]", *extra)
    return Point(
        _number(parser_data, value[0], *extra, 0), _number(parser_data, value[1], *extra, 1)
    )


class BoxData(Model):
    """
    BoxData()

    A box record: its centre, size and, optionally, the size it may not shrink below.
    """

    x: float = field("x", factory=True)
    y: float = field("y", factory=True)
    width: float = field("width", factory=True)
    height: float = field("height", factory=True)
    original_width: Optional[float] = field("original_width", factory=True, default=None)
    original_height: Optional[float] = field("original_height", factory=True, default=None)

    def _x_parser(self, parser_data: ParserData) -> float:
        return _number(parser_data, parser_data.get_field())

    def _y_parser(self, parser_data: ParserData) -> float:
        return _number(parser_data, parser_data.get_field())

    def _size(self, parser_data: ParserData) -> Optional[float]:
        value = parser_data.get_field()
        if value is None:
            return None
        size = _number(parser_data, value)
        if size <= 0:
            raise parser_data.error("expected a positive size")
        return size

    _width_parser = _size
    _height_parser = _size
    _original_width_parser = _size
    _original_height_parser = _size

    def to_box(self) -> Box:
        return Box(
            self.x,
            self.y,
            self.width,
            self.height,
            self.width if self.original_width is None else self.original_width,
            self.height if self.original_height is None else self.original_height,
        )


class VertexData(Model):
    """
    VertexData()

    A vertex record.
    """

    id: str = field("id", factory=True)
    label: Optional[str] = field("label", factory=True, default=None)
    box: Optional[Box] = field("box", factory=True, default=None)
    position: Optional[Point] = field("position", factory=True, default=None)

    def _id_parser(self, parser_data: ParserData) -> str:
        return _identifier(parser_data)

    def _label_parser(self, parser_data: ParserData) -> Optional[str]:
        value = parser_data.get_field()
        if value is not None and not isinstance(value, str):
            raise parser_data.error("expected a string")
        return value

    def _box_parser(self, parser_data: ParserData) -> Optional[Box]:
        value = parser_data.get_field()
        if value is None:
            return None
        return BoxData(value, location=parser_data.field_location()).to_box()

    def _position_parser(self, parser_data: ParserData) -> Optional[Point]:
        value = parser_data.get_field()
        if value is None:
            return None
        return _point(parser_data, value)


class EdgeData(Model):
    """
    EdgeData()

    An edge record, optionally with its routed path.
    """

    id: str = field("id", factory=True)
    source: str = field("source", factory=True)
    target: str = field("target", factory=True)
    path: Optional[tuple[Point, ...]] = field("path", factory=True, default=None)

    def _id_parser(self, parser_data: ParserData) -> str:
        return _identifier(parser_data)

    _source_parser = _id_parser
    _target_parser = _id_parser

    def _path_parser(self, parser_data: ParserData) -> Optional[tuple[Point, ...]]:
        value = parser_data.get_field()
        if value is None:
            return None
        if not isinstance(value, list) or len(value) < 2:
            raise parser_data.error("expected a list of at least two points")
        points = tuple(_point(parser_data, item, index) for index, item in enumerate(value))
        for index, (start, end) in enumerate(zip(points, points[1:]), start=1):
            if abs(start.x - end.x) > 1e-9 and abs(start.y - end.y) > 1e-9:
                raise parser_data.error("non-orthogonal path segment", index)
        return points


class InstanceData(Model):
    """
    InstanceData()

    The records of an instance document.
    """

    vertices: list[VertexData] = field("vertices", factory=True)
    edges: list[EdgeData] = field("edges", factory=True, default_factory=list)
    config: dict[str, Any] = field("config", factory=True, default_factory=dict)

    def _records(self, parser_data: ParserData, model: type[Model]) -> list[Any]:
        value = parser_data.get_field()
        if not isinstance(value, list):
            raise parser_data.error("expected a list")
        return [
            model(item, location=parser_data.field_location(index))
            for index, item in enumerate(value)
        ]

    def _vertices_parser(self, parser_data: ParserData) -> list[VertexData]:
        return self._records(parser_data, VertexData)

    def _edges_parser(self, parser_data: ParserData) -> list[EdgeData]:
        return self._records(parser_data, EdgeData)

    def _config_parser(self, parser_data: ParserData) -> dict[str, Any]:
        value = parser_data.get_field()
        if not isinstance(value, dict):
            raise parser_data.error("expected an object")
        return value
