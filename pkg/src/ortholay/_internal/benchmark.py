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

import concurrent.futures
import csv
import io
import logging
import os
import time
from typing import Iterable, NamedTuple, Optional, Sequence, Union, final

from .errors import InvalidArgument, OrtholayException
from .generator import edge_count_for, generate_random_multigraph
from .io import Instance
from .metrics import DrawingMetrics
from .pipeline import STAGES, PipelineConfig, run_pipeline

__all__ = ("BenchmarkRow", "BenchmarkReport", "run_benchmark_instance", "run_benchmark")

_log = logging.getLogger(__name__)


class BenchmarkRow(NamedTuple):
    """The outcome of one benchmark instance."""

    n: int
    avg_degree: float
    seed: int
    m: int
    timings: dict[str, float]
    total_time: float
    metrics: Optional[DrawingMetrics] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def run_benchmark_instance(
    n: int, avg_degree: float, seed: int, config: PipelineConfig
) -> BenchmarkRow:
    """Generates one random instance and lays it out, recording any failure."""
    m = edge_count_for(n, avg_degree)
    start = time.perf_counter()
    try:
        graph = generate_random_multigraph(n, avg_degree, seed)
        result = run_pipeline(Instance(graph), config.replace(seed=seed))
    except OrtholayException as exc:
        _log.warning("Instance n=%d seed=%d failed: %s", n, seed, exc)
        return BenchmarkRow(
            n, avg_degree, seed, m, {}, time.perf_counter() - start, error=str(exc)
        )
    return BenchmarkRow(
        n,
        avg_degree,
        seed,
        m,
        result.timings,
        time.perf_counter() - start,
        result.metrics,
    )


@final
class BenchmarkReport:
    """
    BenchmarkReport(rows)

    The rows of a benchmark, one per instance.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[BenchmarkRow]) -> None:
        self.rows = list(rows)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} rows={len(self.rows)} failed={len(self.failures)}>"

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> list[BenchmarkRow]:
        return [row for row in self.rows if not row.ok]

    @property
    def columns(self) -> list[str]:
        return [
            "n",
            "avg_degree",
            "seed",
            "m",
            *STAGES,
            "total_time",
            *DrawingMetrics._fields,
            "error",
        ]

    def to_csv(self) -> str:
        """The report as CSV, with stage timings in seconds and empty cells for skipped stages."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            timings = [
                "" if stage not in row.timings else f"{row.timings[stage]:.6f}"
                for stage in STAGES
            ]
            metrics = (
                [""] * len(DrawingMetrics._fields) if row.metrics is None else list(row.metrics)
            )
            writer.writerow(
                [
                    row.n,
                    row.avg_degree,
                    row.seed,
                    row.m,
                    *timings,
                    f"{row.total_time:.6f}",
                    *metrics,
                    row.error or "",
                ]
            )
        return buffer.getvalue()

    def write_csv(self, path: Union[str, os.PathLike[str]]) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fp:
            fp.write(self.to_csv())


def run_benchmark(
    sizes: Sequence[int],
    seeds: Sequence[int],
    *,
    avg_degree: float = 4.0,
    config: Optional[PipelineConfig] = None,
    workers: int = 1,
) -> BenchmarkReport:
    """
    Lays out a random instance for every combination of size and seed.

    Failing instances are recorded in their row and don't stop the batch.

    Parameters:
        sizes: The vertex counts.
        seeds: The seeds of the generator and the force-directed layout.
        avg_degree: The average vertex degree of the instances.
        config: The pipeline parameters.
        workers: The number of worker processes. 1 runs in this process.

    Returns:
        One row per instance, ordered by size and then seed.

    Raises:
        InvalidArgument: ``workers`` is less than 1.
    """
    if workers < 1:
        raise InvalidArgument("workers has to be at least 1.")
    if config is None:
        config = PipelineConfig()
    tasks = [(n, seed) for n in sizes for seed in seeds]
    _log.debug("Running %d benchmark instances on %d worker(s).", len(tasks), workers)
    if workers == 1:
        rows = [run_benchmark_instance(n, avg_degree, seed, config) for n, seed in tasks]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(run_benchmark_instance, n, avg_degree, seed, config)
                for n, seed in tasks
            ]
            rows = [future.result() for future in futures]
    return BenchmarkReport(rows)
