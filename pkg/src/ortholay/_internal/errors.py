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

from typing import Optional

__all__ = (
    "OrtholayException",
    "InvalidArgument",
    "ParseError",
    "ConstructionFailure",
    "RoutingFailure",
    "InternalError",
    "PipelineError",
)


class OrtholayException(Exception):
    """A base class for all of the ortholay's exceptions."""


class InvalidArgument(OrtholayException, ValueError):
    """Thrown when a function is called with arguments violating its preconditions."""


class ParseError(OrtholayException):
    """
    Thrown when an instance document is malformed.

    Attributes:
        location:
            The location of the offending value in the document,
            e.g. ``edges[3].source``. Empty for document-level errors.
    """

    def __init__(self, message: str, *, location: str = "") -> None:
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ConstructionFailure(OrtholayException):
    """Thrown when the routing graph leaves a port without any incident edge."""


class RoutingFailure(OrtholayException):
    """
    Thrown when an edge can't be routed because its ports are disconnected.

    Attributes:
        edge_id: The ID of the edge that couldn't be routed.
    """

    def __init__(self, edge_id: str) -> None:
        self.edge_id = edge_id
        super().__init__(f"No route between the ports of edge {edge_id!r}.")


class InternalError(OrtholayException):
    """
    Thrown when an internal invariant is broken.

    This indicates a bug in ortholay rather than a problem with the input.
    """


class PipelineError(OrtholayException):
    """
    Thrown when a pipeline stage fails.

    Attributes:
        stage: The name of the stage that failed.
        cause: The original exception, also available as ``__cause__``.
    """

    def __init__(self, stage: str, cause: Optional[BaseException] = None) -> None:
        self.stage = stage
        self.cause = cause
        detail = f": {cause}" if cause is not None else ""
        super().__init__(f"Pipeline stage {stage!r} failed{detail}")
