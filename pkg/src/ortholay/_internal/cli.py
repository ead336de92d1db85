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

import csv
import io
import logging
import sys
from typing import Any, NoReturn, Optional

import click

from .benchmark import run_benchmark
from .bit_fields import DebugLayers
from .enums import InstanceFormat, NudgeMode, PipelineMode
from .errors import OrtholayException, ParseError
from .generator import generate_random_multigraph
from .io import Instance, drawing_to_instance, dump_instance, load_instance, write_instance
from .metrics import DrawingMetrics
from .pipeline import PipelineConfig, run_pipeline
from .svg import emit_svg

__all__ = ("cli", "EXIT_OK", "EXIT_PARSE_ERROR", "EXIT_PIPELINE_ERROR")

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_PIPELINE_ERROR = 2


def _int_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Any:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers") from None


def _generate_spec(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> Optional[tuple[int, float, int]]:
    if value is None:
        return None
    parts = value.split(",")
    try:
        n, degree, seed = parts
        return int(n), float(degree), int(seed)
    except ValueError:
        raise click.BadParameter("expected n,avg_degree,seed") from None


def _debug_layers(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Any:
    if not value:
        return DebugLayers()
    try:
        return DebugLayers.from_names(part.strip() for part in value.split(","))
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def format_metrics(metrics: DrawingMetrics, *, as_csv: bool) -> str:
    """The metrics as a CSV header and row, or as ``key=value`` lines."""
    record = metrics.as_dict()
    if as_csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(record.values())
        return buffer.getvalue()
    return "".join(f"{key}={value}\n" for key, value in record.items())


def _write_text(path: str, content: str) -> None:
    if path == "-":
        click.echo(content, nl=False)
        return
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(content)


def _fail(message: str, code: int) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


pipeline_options = [
    click.option(
        "--mode",
        type=click.Choice([mode.value for mode in PipelineMode]),
        default=None,
        help="Pipeline variant. Defaults to the most complete one the instance allows.",
    ),
    click.option("--delta-min", type=float, default=None, help="Minimum object distance (px)."),
    click.option(
        "--nudge",
        type=click.Choice([mode.value for mode in NudgeMode]),
        default=None,
        help="Whether nudging may move boxes and ports.",
    ),
    click.option("--passes", default=None, help="Nudging passes, e.g. HVH."),
]


def _with_pipeline_options(function: Any) -> Any:
    for option in reversed(pipeline_options):
        function = option(function)
    return function


def _config(
    block: dict[str, Any],
    mode: Optional[str],
    delta_min: Optional[float],
    nudge: Optional[str],
    passes: Optional[str],
    seed: Optional[int],
) -> PipelineConfig:
    return PipelineConfig.from_dict(
        block,
        mode=None if mode is None else PipelineMode(mode),
        delta_min=delta_min,
        nudge=None if nudge is None else NudgeMode(nudge),
        passes=passes,
        seed=seed,
    )


@click.group()
@click.option("-v", "--verbose", count=True, help="Log more (repeat for debug output).")
def cli(verbose: int) -> None:
    """Orthogonal layout of multigraphs."""
    _configure_logging(verbose)


@cli.command()
@click.argument("instance", required=False, type=click.Path(dir_okay=False, exists=True))
@click.option(
    "--format",
    "instance_format",
    type=click.Choice([fmt.value for fmt in InstanceFormat]),
    default=None,
    help="Instance encoding. Defaults to the one implied by the file suffix.",
)
@_with_pipeline_options
@click.option("--seed", type=int, default=None, help="Seed of the force-directed layout.")
@click.option("--svg", "svg_path", default=None, help="Write the drawing as SVG ('-' for stdout).")
@click.option(
    "--metrics",
    "metrics_path",
    default=None,
    help="Write the metrics, as CSV if the name ends with .csv, else as key=value lines.",
)
@click.option(
    "--debug-layers",
    callback=_debug_layers,
    default=None,
    help="Comma-separated SVG overlays: channels, representatives, routing_graph,"
    " constraint_arcs or all.",
)
@click.option(
    "--generate",
    callback=_generate_spec,
    default=None,
    help="Lay out a random instance given as n,avg_degree,seed instead of a file.",
)
@click.option(
    "--output-instance",
    default=None,
    help="Write the drawing as a given-routing instance.",
)
def layout(
    instance: Optional[str],
    instance_format: Optional[str],
    mode: Optional[str],
    delta_min: Optional[float],
    nudge: Optional[str],
    passes: Optional[str],
    seed: Optional[int],
    svg_path: Optional[str],
    metrics_path: Optional[str],
    debug_layers: DebugLayers,
    generate: Optional[tuple[int, float, int]],
    output_instance: Optional[str],
) -> None:
    """Lay out an instance document (or a generated instance)."""
    if (instance is None) == (generate is None):
        raise click.UsageError("Pass either an INSTANCE file or --generate.")
    try:
        if generate is not None:
            n, degree, generator_seed = generate
            loaded = Instance(generate_random_multigraph(n, degree, generator_seed))
        else:
            assert instance is not None
            loaded = load_instance(
                instance,
                instance_format=(
                    None if instance_format is None else InstanceFormat(instance_format)
                ),
            )
        config = _config(loaded.config, mode, delta_min, nudge, passes, seed)
    except ParseError as exc:
        _fail(str(exc), EXIT_PARSE_ERROR)
    except OrtholayException as exc:
        _fail(str(exc), EXIT_PIPELINE_ERROR)

    try:
        result = run_pipeline(loaded, config)
    except OrtholayException as exc:
        _fail(str(exc), EXIT_PIPELINE_ERROR)

    if svg_path is not None:
        _write_text(svg_path, emit_svg(result.drawing, debug_layers=debug_layers))
    if metrics_path is not None:
        content = format_metrics(result.metrics, as_csv=metrics_path.lower().endswith(".csv"))
        _write_text(metrics_path, content)
    if output_instance is not None:
        write_instance(drawing_to_instance(result.drawing, config=loaded.config), output_instance)
    _log.info("Laid out %r in %.3f s.", loaded, result.total_time)


@cli.command()
@click.argument("n", type=int)
@click.argument("avg_degree", type=float)
@click.argument("seed", type=int)
@click.option("-o", "--output", default="-", help="Where to write the instance ('-' for stdout).")
def generate(n: int, avg_degree: float, seed: int, output: str) -> None:
    """Generate a random connected multigraph instance."""
    try:
        instance = Instance(generate_random_multigraph(n, avg_degree, seed))
    except OrtholayException as exc:
        _fail(str(exc), EXIT_PIPELINE_ERROR)
    if output == "-":
        content = dump_instance(instance)
        assert isinstance(content, str)
        click.echo(content)
    else:
        write_instance(instance, output)


@cli.command()
@click.option(
    "--sizes", callback=_int_list, default="10,20,40", help="Comma-separated vertex counts."
)
@click.option("--seeds", callback=_int_list, default="1,2,3", help="Comma-separated seeds.")
@click.option("--avg-degree", type=float, default=4.0, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@_with_pipeline_options
@click.option("-o", "--output", default="-", help="Where to write the CSV report.")
def benchmark(
    sizes: list[int],
    seeds: list[int],
    avg_degree: float,
    workers: int,
    mode: Optional[str],
    delta_min: Optional[float],
    nudge: Optional[str],
    passes: Optional[str],
    output: str,
) -> None:
    """Lay out random instances and report stage timings and metrics as CSV."""
    try:
        config = _config({}, mode, delta_min, nudge, passes, None)
        report = run_benchmark(
            sizes, seeds, avg_degree=avg_degree, config=config, workers=workers
        )
    except ParseError as exc:
        _fail(str(exc), EXIT_PARSE_ERROR)
    except OrtholayException as exc:
        _fail(str(exc), EXIT_PIPELINE_ERROR)
    _write_text(output, report.to_csv())
    if report.failures:
        _fail(f"{len(report.failures)} of {len(report)} instances failed", EXIT_PIPELINE_ERROR)


def main() -> None:
    cli(prog_name="ortholay")
