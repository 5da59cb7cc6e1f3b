from __future__ import annotations

import logging
from dataclasses import dataclass
from time import perf_counter

import numpy as np

from lyndon_sa.config import RunConfig
from lyndon_sa.saca.lyndon import build_marked_pss
from lyndon_sa.saca.memory import AllocationTracker
from lyndon_sa.saca.phase1 import initial_grouping, run_phase1
from lyndon_sa.saca.phase2 import SuffixArray, run_phase2_bfs
from lyndon_sa.text import IndexWidth, Text, width_for_bits

logger = logging.getLogger(__name__)

__all__ = [
    "RunConfig",
    "RunStats",
    "SuffixArray",
    "suffix_array",
    "suffix_array_with_stats",
    "verify_suffix_array",
]


@dataclass(frozen=True)
class RunStats:
    """Per-phase wall times (seconds) and the auxiliary-memory peak of one construction.

    peak_aux_bytes counts every working array registered with the allocation
    tracker; the input text and the output suffix array are excluded.
    """

    init_time: float
    phase1_time: float
    phase2_time: float
    peak_aux_bytes: int
    width: IndexWidth
    group_count: int
    n: int

    @property
    def total_time(self) -> float:
        return self.init_time + self.phase1_time + self.phase2_time

    @property
    def aux_bytes_per_char(self) -> float:
        return self.peak_aux_bytes / self.n if self.n else 0.0


def suffix_array(text: Text) -> SuffixArray:
    sa, _ = suffix_array_with_stats(text)
    return sa


def suffix_array_with_stats(
    text: Text,
    config: RunConfig | None = None,
    *,
    tracker: AllocationTracker | None = None,
) -> tuple[SuffixArray, RunStats]:
    cfg = config or RunConfig()
    if cfg.debug:
        text.validate()
    width = width_for_bits(cfg.forced_width, text.n)
    tracker = tracker or AllocationTracker()

    t0 = perf_counter()
    mpss = build_marked_pss(text, width, tracker)
    state = initial_grouping(text, mpss, tracker=tracker)
    t1 = perf_counter()
    grouping = run_phase1(state, mpss, tracker=tracker)
    t2 = perf_counter()
    # Phase I leaves A free and I holding the group ids; Phase II fills A in place
    sa = run_phase2_bfs(
        grouping,
        mpss,
        cfg.queue_capacity,
        out=state.A,
        reuse_buffers=True,
        tracker=tracker,
        debug=cfg.debug,
    )
    t3 = perf_counter()
    for label in list(tracker.live()):
        tracker.release(label)

    stats = RunStats(
        init_time=t1 - t0,
        phase1_time=t2 - t1,
        phase2_time=t3 - t2,
        peak_aux_bytes=tracker.peak_bytes,
        width=width,
        group_count=grouping.group_count,
        n=text.n,
    )
    logger.debug(
        "n=%d width=%d groups=%d init=%.4fs phase1=%.4fs phase2=%.4fs aux=%d bytes",
        stats.n,
        width.bits,
        stats.group_count,
        stats.init_time,
        stats.phase1_time,
        stats.phase2_time,
        stats.peak_aux_bytes,
    )
    return sa, stats


def verify_suffix_array(text: Text, sa: SuffixArray | np.ndarray) -> bool:
    """True iff `sa` is a permutation listing the suffixes in increasing order.

    Comparing S_a and S_b for adjacent entries reduces to their first symbols
    and, on a tie, the ranks of S_{a+1} and S_{b+1} under `sa` itself; for a
    permutation this is equivalent to comparing the suffixes directly.
    """
    n = text.n
    try:
        idx = np.asarray(sa.indices if isinstance(sa, SuffixArray) else sa).astype(np.int64, copy=False)
    except (TypeError, ValueError, OverflowError):
        return False
    if idx.ndim != 1 or idx.shape[0] != n:
        return False
    if n == 0:
        return True
    if int(idx.min()) < 0 or int(idx.max()) >= n:
        return False
    seen = np.zeros(n, dtype=bool)
    seen[idx] = True
    if not seen.all():
        return False

    # rank[n] = -1 stands for the empty suffix past the terminal
    rank = np.empty(n + 1, dtype=np.int64)
    rank[idx] = np.arange(n, dtype=np.int64)
    rank[n] = -1
    a = idx[:-1]
    b = idx[1:]
    sym = text.symbols.astype(np.int64)
    sa_, sb_ = sym[a], sym[b]
    if np.any(sa_ > sb_):
        return False
    tie = sa_ == sb_
    return bool(np.all(rank[a[tie] + 1] < rank[b[tie] + 1]))
