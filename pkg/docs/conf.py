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

# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import importlib
import inspect
from collections import defaultdict
from types import ModuleType
from typing import Any, Iterator

import ortholay

# -- Project information -----------------------------------------------------

project = "ortholay"
copyright = "2024, The ortholay authors"
author = "The ortholay authors"

# The short X.Y version.
version = ortholay.__version__
# The full version, including alpha/beta/rc tags.
release = version

# -- General configuration ---------------------------------------------------

extensions = [
    # built-in extensions
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.napoleon",
    # 3rd-party extensions
    "furo",
    "sphinx_copybutton",
    "sphinx-prompt",
    "sphinxcontrib.jinja",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# Role which is assigned when you make a simple reference within backticks
default_role = "any"

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"


# -- Options for autodoc extension -------------------------------------------

autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_typehints_description_target = "documented"
napoleon_attr_annotations = True

modules: dict[str, Any] = {"ortholay": ortholay}
for name in ortholay.__all__:
    obj = getattr(ortholay, name)
    if inspect.ismodule(obj):
        modules[obj.__name__] = obj

autodoc_type_aliases = {
    name: f"{module_name}.{name}"
    for module_name, module in modules.items()
    for name in module.__all__
    if inspect.isclass(getattr(module, name))
}

# -- Options for sphinx-jinja extension --------------------------------------


def members(module_name: str, /) -> Iterator[tuple[str, Any]]:
    module = modules[module_name]
    for name in module.__all__:
        yield name, getattr(module, name)


def classes(module_name: str, /) -> Iterator[type]:
    for _, obj in members(module_name):
        if inspect.isclass(obj):
            yield obj


def functions(module_name: str, /) -> Iterator[str]:
    for name, obj in members(module_name):
        if inspect.isfunction(obj):
            yield name


def grouped_classes(module_name: str, /) -> Iterator[tuple[ModuleType, list[type]]]:
    groups = defaultdict(list)
    for obj in classes(module_name):
        groups[obj.__module__].append(obj)
    for internal_name, grouped in groups.items():
        yield importlib.import_module(internal_name), grouped


jinja_contexts = {
    "autodoc": {
        "classes": classes,
        "functions": functions,
        "grouped_classes": grouped_classes,
    },
}

# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}
