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

import csv
import io
from pathlib import Path

import pytest

from ortholay import PipelineConfig
from ortholay.errors import InvalidArgument
from ortholay.io import run_benchmark


def test_rows_are_ordered_by_size_and_seed() -> None:
    report = run_benchmark([6, 4], [2, 1], avg_degree=2, config=PipelineConfig())
    assert len(report) == 4
    assert [(row.n, row.seed) for row in report.rows] == [(6, 2), (6, 1), (4, 2), (4, 1)]
    assert report.failures == []
    for row in report.rows:
        assert row.ok
        assert row.m == row.n
        assert row.metrics is not None
        assert "edge nudging" in row.timings
        assert row.total_time >= sum(row.timings.values()) - 1e-9


def test_csv_report() -> None:
    report = run_benchmark([5], [1])
    records = list(csv.DictReader(io.StringIO(report.to_csv())))
    assert len(records) == 1
    record = records[0]
    assert list(record) == report.columns
    assert (record["n"], record["seed"], record["m"]) == ("5", "1", "10")
    assert record["error"] == ""
    assert record["force-directed"] != ""
    assert int(record["crossings"]) >= 0


def test_failures_are_recorded(tmp_path: Path) -> None:
    report = run_benchmark([10, 2], [1], avg_degree=1)
    assert len(report.failures) == 1
    failed = report.failures[0]
    assert failed.n == 10
    assert failed.metrics is None
    assert "can't connect 10 vertices" in (failed.error or "")
    assert report.rows[1].ok

    path = tmp_path / "report.csv"
    report.write_csv(path)
    with open(path, encoding="utf-8", newline="") as fp:
        records = list(csv.DictReader(fp))
    assert records[0]["edge routing"] == ""
    assert records[0]["crossings"] == ""
    assert "can't connect" in records[0]["error"]
    assert records[1]["error"] == ""


def test_workers_have_to_be_positive() -> None:
    with pytest.raises(InvalidArgument):
        run_benchmark([5], [1], workers=0)
