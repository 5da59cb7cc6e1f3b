from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean, median

from rich.table import Table

from lyndon_sa.pipeline import RunStats


@dataclass(frozen=True)
class BenchSummary:
    n: int
    groups: int
    width: int
    queue_capacity: int
    iterations: int
    init_s: float
    phase1_s: float
    phase2_s: float
    total_s: float
    total_p50_s: float
    peak_aux_bytes: int
    aux_bytes_per_char: float
    sa_sha256: str


def summarize_runs(runs: list[RunStats], *, queue_capacity: int, sa_sha256: str) -> BenchSummary:
    """Means over all timed runs (plus the median total); memory is the worst run."""
    if not runs:
        raise ValueError("no timed runs to summarize")
    first = runs[0]
    peak = max(r.peak_aux_bytes for r in runs)
    return BenchSummary(
        n=first.n,
        groups=first.group_count,
        width=first.width.bits,
        queue_capacity=queue_capacity,
        iterations=len(runs),
        init_s=fmean(r.init_time for r in runs),
        phase1_s=fmean(r.phase1_time for r in runs),
        phase2_s=fmean(r.phase2_time for r in runs),
        total_s=fmean(r.total_time for r in runs),
        total_p50_s=median(r.total_time for r in runs),
        peak_aux_bytes=peak,
        aux_bytes_per_char=peak / first.n if first.n else 0.0,
        sa_sha256=sa_sha256,
    )


def bench_payload(summary: BenchSummary) -> dict[str, object]:
    return {
        "init_s": summary.init_s,
        "phase1_s": summary.phase1_s,
        "phase2_s": summary.phase2_s,
        "total_s": summary.total_s,
        "total_p50_s": summary.total_p50_s,
        "aux_bytes_per_char": summary.aux_bytes_per_char,
        "peak_aux_bytes": summary.peak_aux_bytes,
        "n": summary.n,
        "groups": summary.groups,
        "width": summary.width,
        "queue_capacity": summary.queue_capacity,
        "iterations": summary.iterations,
        "sa_sha256": summary.sa_sha256,
    }


def bench_table(summary: BenchSummary, *, title: str | None = None) -> Table:
    table = Table(title=title or f"n={summary.n} width={summary.width} groups={summary.groups}")
    table.add_column("Phase")
    table.add_column("Mean (s)", justify="right")
    table.add_row("init", f"{summary.init_s:.4f}")
    table.add_row("phase1", f"{summary.phase1_s:.4f}")
    table.add_row("phase2", f"{summary.phase2_s:.4f}")
    table.add_row("total", f"{summary.total_s:.4f}")
    table.add_row("total p50", f"{summary.total_p50_s:.4f}")
    table.caption = (
        f"peak aux {summary.peak_aux_bytes} bytes ({summary.aux_bytes_per_char:.2f} B/char), "
        f"{summary.iterations} runs, queue {summary.queue_capacity}"
    )
    return table


def write_bench_json(summary: BenchSummary, *, out_path: Path) -> Path:
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps(bench_payload(summary), indent=2), encoding="utf-8")
    return out_path
