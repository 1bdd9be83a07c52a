"""Benchmark harness: median wall time per (family, n, algorithm) cell.

Timing covers only the determinant evaluation; matrix generation happens
once per cell, outside the timed region. Each record also carries the
computed determinant in signed-log form so correctness can be asserted
alongside timing. Timed runs execute serially.
"""

from __future__ import annotations

import csv
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

from .core import PlainOverflowError, SignedLogValue
from .generators import Family, gen_example
from .recurrences import (
    Algorithm,
    det_hybrid,
    det_hybrid_scaled,
    det_three_term,
)
from .symbolic import det_detgtri

BENCH_ALGORITHMS = (
    Algorithm.DETGTRI,
    Algorithm.THREE_TERM,
    Algorithm.HYBRID,
    Algorithm.HYBRID_SCALED,
)


@dataclass(frozen=True)
class BenchRecord:
    family: Family
    n: int
    algorithm: Algorithm
    trials: int
    median_seconds: float
    result_logmag: float
    result_sign: int


def _as_signed_log(value) -> SignedLogValue:
    if isinstance(value, SignedLogValue):
        return value
    if isinstance(value, float):
        return SignedLogValue.from_float(value)
    return SignedLogValue.from_exact(value)


def _runner(algorithm: Algorithm) -> Callable:
    if algorithm is Algorithm.DETGTRI:
        return det_detgtri
    if algorithm is Algorithm.THREE_TERM:
        return lambda m: det_three_term(m).value
    if algorithm is Algorithm.HYBRID:
        return lambda m: det_hybrid(m).value
    if algorithm is Algorithm.HYBRID_SCALED:
        return lambda m: det_hybrid_scaled(m).value
    raise ValueError(f"algorithm {algorithm} is not benchmarkable")


def _time_cell(fn, matrix, trials: int, warmup: int) -> Tuple[float, SignedLogValue]:
    for _ in range(warmup):
        fn(matrix)
    times = []
    value = None
    for _ in range(trials):
        t0 = time.perf_counter()
        value = fn(matrix)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), _as_signed_log(value)


def run_bench(
    plan: Iterable[Tuple[Family, int, Algorithm]],
    trials: int = 3,
    warmup: int = 2,
) -> List[BenchRecord]:
    """Run every (family, n, algorithm) cell and return one record per cell.

    A plain-mode overflow aborts the cell and falls back to the scaled
    hybrid kernel, with a diagnostic on stderr; the record then reports
    the fallback algorithm.
    """
    if trials < 3:
        raise ValueError("trials must be at least 3")
    records = []
    for family, n, algorithm in plan:
        family = Family(family)
        algorithm = Algorithm(algorithm)
        if algorithm not in BENCH_ALGORITHMS:
            raise ValueError(f"algorithm {algorithm.value} is not benchmarkable")
        matrix = gen_example(family, n)
        try:
            median, value = _time_cell(_runner(algorithm), matrix, trials, warmup)
        except PlainOverflowError as exc:
            print(
                f"bench: {family.value} n={n} {algorithm.value}: {exc}; "
                "falling back to hybrid_scaled",
                file=sys.stderr,
            )
            algorithm = Algorithm.HYBRID_SCALED
            median, value = _time_cell(_runner(algorithm), matrix, trials, warmup)
        records.append(
            BenchRecord(family, n, algorithm, trials, median, value.logmag, value.sign)
        )
    return records


CSV_HEADER = ["family", "n", "algorithm", "trials", "median_seconds", "result_sign", "result_logmag"]


def emit_csv(records: Sequence[BenchRecord], path) -> None:
    """Write records to CSV, sorted by (family, n, algorithm)."""
    if not records:
        raise ValueError("no records to write")
    rows = sorted(records, key=lambda r: (r.family.value, r.n, r.algorithm.value))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow(
                [
                    r.family.value,
                    r.n,
                    r.algorithm.value,
                    r.trials,
                    repr(r.median_seconds),
                    r.result_sign,
                    repr(r.result_logmag),
                ]
            )
