"""Operation-count and wall-clock benchmarks for both generators.

Complexity is judged on the operation counters; wall time is informational.
Timed runs use a counting-only sink, so no output formatting is measured.
"""
from __future__ import annotations

import csv
import enum
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, TextIO

from .common import GenConfig, Kind, OpCounters
from .iterative import gen_iterative
from .recursive import gen_recursive

CSV_HEADER = ["n", "kind", "algorithm", "count", "wall_ns", "ns_per_string",
              "rotations", "scans", "splices", "nsm_calls"]


class Algorithm(str, enum.Enum):
    RECURSIVE = "recursive"
    ITERATIVE = "iterative"


GENERATORS = {
    Algorithm.RECURSIVE: gen_recursive,
    Algorithm.ITERATIVE: gen_iterative,
}


@dataclass
class BenchRecord:
    n: int
    kind: Kind
    algorithm: Algorithm
    count: int
    wall_ns: int
    ops: OpCounters

    @property
    def time_per_string(self) -> float:
        return self.wall_ns / self.count

    @property
    def ops_per_string(self) -> float:
        return self.ops.total / self.count

    def row(self) -> list:
        return [self.n, self.kind.value, self.algorithm.value, self.count, self.wall_ns,
                round(self.time_per_string, 3), self.ops.rotations, self.ops.scans,
                self.ops.splices, self.ops.nsm_calls]


def count_ops(n: int, kind: Kind | str, algorithm: Algorithm | str) -> tuple[int, OpCounters]:
    ops = OpCounters()
    count = GENERATORS[Algorithm(algorithm)](GenConfig(n, kind), None, ops)
    return count, ops


def run_bench(n_values: Iterable[int], kind: Kind | str, algorithm: Algorithm | str,
              repetitions: int = 3) -> list[BenchRecord]:
    kind = Kind.coerce(kind)
    algorithm = Algorithm(algorithm)
    gen = GENERATORS[algorithm]
    records = []
    for n in n_values:
        cfg = GenConfig(n, kind)
        times = []
        count = 0
        for _ in range(max(1, repetitions)):
            start = time.perf_counter_ns()
            count = gen(cfg)
            times.append(time.perf_counter_ns() - start)
        counted, ops = count_ops(n, kind, algorithm)
        if counted != count:
            raise RuntimeError(f"instrumented run disagrees on count: {counted} != {count}")
        records.append(BenchRecord(n, kind, algorithm, count, int(statistics.median(times)), ops))
    return records


def write_csv(records: Iterable[BenchRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())
