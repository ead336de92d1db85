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

from typing import Any, Callable, Optional, TypeVar, Union

from ...errors import ParseError

__all__ = (
    "FieldMissing",
    "ParserData",
    "field",
    "Model",
    "format_location",
)

_ModelMetaT = TypeVar("_ModelMetaT", bound="_ModelMeta")

Key = Union[str, int]


def format_location(*parts: Key) -> str:
    """
    Joins location parts into a path like ``edges[3].path[1]``.

    String parts are joined with dots and integer parts become indices.
    """
    location = ""
    for part in parts:
        if isinstance(part, int):
            location += f"[{part}]"
        elif part:
            location += f".{part}" if location else part
    return location


class FieldMissing(Exception):
    __slots__ = ("key",)

    def __init__(self, key: str) -> None:
        self.key = key
        super().__init__(f"Missing required field: {key}")


class ParserData:
    """The raw record a field parser reads its value from, with the field's location."""

    __slots__ = ("data", "location", "key", "default", "default_factory")

    def __init__(
        self,
        *,
        data: dict[str, Any],
        location: str,
        key: str,
        default: Any = ...,
        default_factory: Optional[Callable[[], Any]] = None,
    ) -> None:
        self.data = data
        self.location = location
        self.key = key
        self.default = default
        self.default_factory = default_factory

    def field_location(self, *extra: Key) -> str:
        """Location of this field (optionally extended by ``extra``) in the document."""
        return format_location(self.location, self.key, *extra)

    def error(self, message: str, *extra: Key) -> ParseError:
        return ParseError(message, location=self.field_location(*extra))

    def get_field(self) -> Any:
        """
        The raw value of the field.

        Raises:
            FieldMissing: The record has no such key and the field has no default.
        """
        try:
            return self.data[self.key]
        except KeyError:
            pass
        if self.default is not ...:
            return self.default
        if self.default_factory is not None:
            return self.default_factory()
        raise FieldMissing(self.key)


class _ModelField:
    __slots__ = ("_key", "_factory", "_default", "_default_factory")

    def __init__(
        self,
        key: str,
        *,
        factory: bool,
        default: Any,
        default_factory: Optional[Callable[[], Any]],
    ) -> None:
        if default is not ... and default_factory is not None:
            raise TypeError("`default` and `default_factory` can't both be passed!")
        self._key = key
        self._factory = factory
        self._default = default
        self._default_factory = default_factory

    def __set_name__(self, owner: type, name: str) -> None:
        if type(owner) is not _ModelMeta:
            raise TypeError("field(...) can only be used on a Model class.")

    def get_value(self, model: Model, attr_name: str, data: dict[str, Any], location: str) -> Any:
        parser_data = ParserData(
            data=data,
            location=location,
            key=self._key,
            default=self._default,
            default_factory=self._default_factory,
        )
        if self._factory:
            parser: Callable[[ParserData], Any] = getattr(model, f"_{attr_name}_parser")
            return parser(parser_data)
        return parser_data.get_field()


def field(
    key: str,
    *,
    factory: bool = False,
    default: Any = ...,
    default_factory: Optional[Callable[[], Any]] = None,
) -> Any:
    """
    Declares a field of a `Model`, read from ``key`` of the record.

    With ``factory=True`` the value is produced by the model's
    ``_<attribute>_parser(parser_data)`` method instead of taken as is.
    """
    return _ModelField(key, factory=factory, default=default, default_factory=default_factory)


class _ModelMeta(type):
    _MODEL_FIELDS: dict[str, _ModelField]

    def __new__(
        cls: type[_ModelMetaT],
        name: str,
        bases: tuple[type, ...],
        attrs: dict[str, Any],
    ) -> _ModelMetaT:
        slots = set(attrs.pop("__slots__", ()))
        generated_cls = super().__new__(cls, name, bases, attrs)

        fields: dict[str, _ModelField] = {}
        for base in reversed(generated_cls.__mro__):
            inherited: Optional[dict[str, _ModelField]] = base.__dict__.get("_MODEL_FIELDS")
            if inherited is not None:
                fields.update(inherited)
                continue
            annotations = base.__dict__.get("__annotations__", {})
            for attr_name, value in base.__dict__.items():
                if attr_name in annotations and isinstance(value, _ModelField):
                    fields[attr_name] = value

        attrs["_MODEL_FIELDS"] = fields
        for attr_name, model_field in fields.items():
            if model_field._factory and not hasattr(generated_cls, f"_{attr_name}_parser"):
                raise TypeError(
                    f"{attr_name} is defined with factory=True"
                    " but parser for it is not defined on the class."
                )
            slots.add(attr_name)
            attrs.pop(attr_name, None)

        attrs["__slots__"] = tuple(sorted(slots))
        return super().__new__(cls, name, bases, attrs)


class Model(metaclass=_ModelMeta):
    """
    Model()

    Base class for the records read from an instance document.
    """

    __slots__ = ("raw_data", "location")

    def __init__(self, raw_data: Any, *, location: str = "") -> None:
        if not isinstance(raw_data, dict):
            raise ParseError("expected an object", location=location)
        #: dict[str, Any]: The raw record, as given by the document.
        self.raw_data: dict[str, Any] = raw_data
        #: str: The location of the record in the document.
        self.location = location
        for attr_name, model_field in self.__class__._MODEL_FIELDS.items():
            try:
                value = model_field.get_value(self, attr_name, raw_data, location)
            except FieldMissing as exc:
                raise ParseError(
                    "missing required field", location=format_location(location, exc.key)
                ) from None
            setattr(self, attr_name, value)

    def __repr__(self) -> str:
        values = " ".join(
            f"{attr_name}={getattr(self, attr_name)!r}"
            for attr_name in self.__class__._MODEL_FIELDS
        )
        return f"<{self.__class__.__name__} {values}>"
