"""Phase II: induce the suffix array from the Lyndon grouping.

A left-to-right scan over the output array finds marked entries i; i-1 is
then the first element of the ps-chain of i (the suffixes whose next smaller
suffix is i), and each chain element is appended to its group. The chains are
walked breadth-first through a bounded FIFO, so the per-level writes land in
increasing group order instead of jumping around.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass

import numpy as np

from lyndon_sa.saca.cells import is_marked, kernel, marked, value_of
from lyndon_sa.saca.lyndon import MarkedPss
from lyndon_sa.saca.memory import AllocationTracker
from lyndon_sa.saca.phase1 import LyndonGrouping

logger = logging.getLogger(__name__)

DEFAULT_QUEUE_CAPACITY = 1024


@kernel
def _seed(A, C, G, low_mask, mark, empty):
    n = A.shape[0]
    for k in range(n):
        A[k] = empty
    last = n - 1
    # the terminal suffix is the smallest; it is the only chain start without a predecessor
    if n > 1:
        A[0] = marked(last, mark)
    else:
        A[0] = last
    C[G[last]] += 1


@kernel
def _insert(A, C, G, pss_cells, v, low_mask, mark):
    cell = pss_cells[v + 1]
    parent = value_of(cell, low_mask) - 1
    g = G[v]
    pos = C[g]
    # marked iff v-1 has a next smaller suffix at v, i.e. pss[v] < v-1
    if parent + 1 < v:
        A[pos] = marked(v, mark)
    else:
        A[pos] = v
    C[g] = pos + 1
    return is_marked(cell), parent


@kernel
def _bfs_kernel(A, C, G, pss_cells, Q, low_mask, mark, empty):
    n = A.shape[0]
    w = Q.shape[0]
    _seed(A, C, G, low_mask, mark, empty)
    head = 0
    count = 0
    cursor = 0
    while True:
        while count < w and cursor < n and A[cursor] != empty:
            c = A[cursor]
            if is_marked(c):
                A[cursor] = value_of(c, low_mask)
                Q[(head + count) % w] = value_of(c, low_mask) - 1
                count += 1
            cursor += 1
        if count == 0:
            break
        # one level: everything queued now, pushing the next level behind it
        level = count
        for _ in range(level):
            v = Q[head]
            head = (head + 1) % w
            count -= 1
            last_child, parent = _insert(A, C, G, pss_cells, v, low_mask, mark)
            if last_child:
                if parent < 0:
                    raise AssertionError("the root of the pss-tree reached the queue")
                Q[(head + count) % w] = parent
                count += 1
    return cursor


@kernel
def _reference_kernel(A, C, G, pss_cells, low_mask, mark, empty):
    n = A.shape[0]
    _seed(A, C, G, low_mask, mark, empty)
    for i in range(n):
        c = A[i]
        if not is_marked(c):
            continue
        A[i] = value_of(c, low_mask)
        p = value_of(c, low_mask) - 1
        while True:
            last_child, parent = _insert(A, C, G, pss_cells, p, low_mask, mark)
            if not last_child:
                break
            p = parent


@dataclass(frozen=True, eq=False)
class SuffixArray:
    """Suffix array of a terminated text; entry 0 is always the terminal position n-1."""

    indices: np.ndarray

    @property
    def n(self) -> int:
        return int(self.indices.shape[0])

    def __len__(self) -> int:
        return self.n

    def tolist(self) -> list[int]:
        return [int(v) for v in self.indices]

    def without_sentinel(self) -> np.ndarray:
        """Suffix array of the raw input (the terminal entry dropped)."""
        return self.indices[1:]

    def checksum(self) -> str:
        """sha256 over the entries as little-endian int64, independent of the cell width."""
        return hashlib.sha256(self.indices.astype("<i8").tobytes()).hexdigest()


def _buffers(
    grouping: LyndonGrouping,
    mpss: MarkedPss,
    out: np.ndarray | None,
    reuse_buffers: bool,
    tracker: AllocationTracker | None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    dtype = mpss.width.dtype
    if reuse_buffers:
        # C consumes the group starts, G is the group map Phase I left behind
        C = grouping.starts
        G = grouping.group_of
    else:
        C = grouping.starts.astype(dtype, copy=True)
        G = grouping.group_of.astype(dtype, copy=True)
        if tracker is not None:
            tracker.adopt("insert_pointers", C)
            tracker.adopt("group_map", G)
    if out is None or out.shape[0] != grouping.n or out.dtype != dtype:
        out = np.empty(grouping.n, dtype=dtype)
    return out, C, G


def _check_filled(A: np.ndarray, empty: int) -> None:
    unset = np.flatnonzero(A == empty)
    if unset.size:
        raise AssertionError(f"{unset.size} suffix array cells left unset, first at {int(unset[0])}")


def run_phase2_bfs(
    grouping: LyndonGrouping,
    mpss: MarkedPss,
    capacity: int = DEFAULT_QUEUE_CAPACITY,
    *,
    out: np.ndarray | None = None,
    reuse_buffers: bool = False,
    tracker: AllocationTracker | None = None,
    debug: bool = False,
) -> SuffixArray:
    if capacity < 1:
        raise ValueError("queue capacity must be at least 1")
    width = mpss.width
    A, C, G = _buffers(grouping, mpss, out, reuse_buffers, tracker)
    Q = np.empty(int(capacity), dtype=width.dtype)
    if tracker is not None:
        tracker.adopt("queue", Q)
    cursor = _bfs_kernel(A, C, G, mpss.cells, Q, width.empty, width.mark, width.empty)
    logger.debug("phase2: scan stopped at %d of %d", int(cursor), grouping.n)
    if debug:
        _check_filled(A, width.empty)
    if tracker is not None:
        tracker.release("queue")
        tracker.release("insert_pointers")
        tracker.release("group_map")
    return SuffixArray(indices=A)


def run_phase2_reference(
    grouping: LyndonGrouping,
    mpss: MarkedPss,
    *,
    out: np.ndarray | None = None,
    reuse_buffers: bool = False,
    debug: bool = False,
) -> SuffixArray:
    """Chain-at-a-time insertion; same output as the breadth-first variant."""
    width = mpss.width
    A, C, G = _buffers(grouping, mpss, out, reuse_buffers, None)
    _reference_kernel(A, C, G, mpss.cells, width.empty, width.mark, width.empty)
    if debug:
        _check_filled(A, width.empty)
    return SuffixArray(indices=A)
