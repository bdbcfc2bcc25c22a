"""Figures for benchmark reports, written next to the CSV output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_sieve_bench(rows, path: str | Path, width: float = 6.0, height: float = 4.0) -> Path:
    """Log-log plot of sieve time against limit, with throughput on a twin axis.

    Args:
        rows: ``BenchRow`` records, one per limit.
        path: output file; the format follows the suffix (png, pdf, svg).
    """
    limits = [r.limit for r in rows]
    elapsed = [r.elapsed_ms for r in rows]
    throughput = [r.limit / max(r.elapsed_ms, 1e-9) / 1000.0 for r in rows]

    fig, ax = plt.subplots(figsize=(width, height))
    ax.loglog(limits, elapsed, "o-", color="tab:blue", label="elapsed")
    ax.set_xlabel("sieve limit")
    ax.set_ylabel("elapsed (ms)", color="tab:blue")
    ax.grid(True, which="both", alpha=0.3)

    ax2 = ax.twinx()
    ax2.semilogx(limits, throughput, "s--", color="tab:orange", label="throughput")
    ax2.set_ylabel("entries per µs", color="tab:orange")

    ax.set_title("divisor-sum sieve")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
