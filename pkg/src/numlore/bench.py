"""Throughput and correctness benchmark for the divisor-sum sieve."""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from pathlib import Path

from numlore import arith

CSV_FIELDS = ("limit", "elapsed_ms", "checksum")
SPOT_CHECKS = 200


@dataclass(frozen=True)
class BenchRow:
    limit: int
    elapsed_ms: float
    checksum: int
    agrees: bool


def _ladder(limit: int, steps: int) -> list[int]:
    if steps <= 1:
        return [limit]
    # geometric ladder ending at limit, deduplicated for small limits
    ratio = limit ** (1 / steps)
    limits = sorted({max(1, round(ratio**i)) for i in range(1, steps + 1)} | {limit})
    return limits


def run_sieve_bench(limit: int, repeat: int = 3, steps: int = 1, seed: int = 0) -> list[BenchRow]:
    """Time ``divisor_sum_sieve`` at one or more limits.

    ``elapsed_ms`` is the best of ``repeat`` runs. ``checksum`` is the sum of
    the table, and ``agrees`` records a spot check of random entries against
    the factorization-based ``proper_divisor_sum``.
    """
    rng = random.Random(seed)
    rows = []
    for lim in _ladder(limit, steps):
        best = float("inf")
        table = None
        for _ in range(max(1, repeat)):
            start = time.perf_counter()
            table = arith.divisor_sum_sieve(lim)
            best = min(best, time.perf_counter() - start)
        sample = {1, lim} | {rng.randint(1, lim) for _ in range(SPOT_CHECKS)}
        agrees = all(int(table[n]) == arith.proper_divisor_sum(n) for n in sample)
        rows.append(BenchRow(lim, best * 1000.0, int(table[1:].sum()), agrees))
    return rows


def write_csv(rows: list[BenchRow], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for r in rows:
            writer.writerow((r.limit, f"{r.elapsed_ms:.3f}", r.checksum))
