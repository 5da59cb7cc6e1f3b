"""Phase I: refine the first-symbol grouping into the Lyndon grouping.

Groups are visited from the highest down. Processing a Lyndon group moves the
pss-parents of its members into new groups directly behind their current
ones, ordered by how many children they have in the group and by whether
their last child is among them (finalists become Lyndon groups, everybody
else a strongly preliminary group). Weakly preliminary groups never exist.

Storage (all of length n unless noted):
  A  members of unprocessed Lyndon groups (ascending), size cells of strongly
     preliminary groups, and scratch inside the group being processed. The
     starts of processed groups are kept in A's processed tail.
  I  group pointer: I[s] is the start of s's group.
  B  scratch, grown to the largest processed group.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from lyndon_sa.saca.cells import is_marked, kernel, marked, value_of
from lyndon_sa.saca.lyndon import MarkedPss
from lyndon_sa.saca.memory import AllocationTracker
from lyndon_sa.text import IndexWidth, Text

logger = logging.getLogger(__name__)

_INITIAL_SCRATCH = 64


@kernel
def _is_leaf(pss_cells, i, n, low_mask):
    # S_i > S_{i+1}  <=>  i+1 is not a child of i
    if i == n - 1:
        return True
    return value_of(pss_cells[i + 2], low_mask) - 1 != i


@kernel
def _initial_grouping_kernel(symbols, pss_cells, A, I, low_mask):
    n = symbols.shape[0]
    sigma = 0
    for i in range(n):
        if symbols[i] >= sigma:
            sigma = np.int64(symbols[i]) + 1
    # bucket 2c holds the leaves starting with c, bucket 2c+1 the inner nodes
    counts = np.zeros(2 * sigma, np.int64)
    for i in range(n):
        b = 2 * np.int64(symbols[i])
        if not _is_leaf(pss_cells, i, n, low_mask):
            b += 1
        counts[b] += 1
    starts = np.empty(2 * sigma, np.int64)
    acc = 0
    for b in range(2 * sigma):
        starts[b] = acc
        acc += counts[b]
    for b in range(1, 2 * sigma, 2):
        if counts[b] > 0:
            A[starts[b]] = counts[b]
    for i in range(n - 1, -1, -1):
        b = 2 * np.int64(symbols[i])
        if _is_leaf(pss_cells, i, n, low_mask):
            counts[b] -= 1
            A[starts[b] + counts[b]] = i
            I[i] = starts[b]
        else:
            I[i] = starts[b + 1]


@kernel
def _reorder_lyndon_kernel(A, I, elems, starts, low_mask, mark):
    # elems ascending; starts[t] is the current group start of elems[t].
    n = A.shape[0]
    k = elems.shape[0]
    for t in range(k - 1, -1, -1):
        gs = starts[t]
        remaining = A[gs] - 1
        A[gs] = remaining
        # when remaining hits 0 this overwrites the size cell: the marked
        # member left at the old start says the old group is gone
        A[gs + remaining] = marked(elems[t], mark)
    for t in range(k):
        gs = starts[t]
        c = A[gs]
        if is_marked(c):
            ns = gs
        else:
            ns = gs + c
        I[elems[t]] = ns
        starts[t] = ns
    for t in range(k):
        j = np.int64(starts[t])
        while j < n and is_marked(A[j]):
            A[j] = value_of(A[j], low_mask)
            j += 1


@kernel
def _reorder_preliminary_kernel(A, I, elems, starts):
    k = elems.shape[0]
    for t in range(k):
        A[starts[t]] -= 1
    for t in range(k):
        gs = starts[t]
        ns = gs + A[gs]
        I[elems[t]] = ns
        starts[t] = ns
    for t in range(k):
        A[starts[t]] = 0
    for t in range(k):
        A[starts[t]] += 1


@kernel
def _process_group_kernel(A, I, pss_cells, B, key_counts, g_s, g_e, low_mask, mark):
    size = g_e - g_s + 1
    if B.shape[0] < size:
        B = np.empty(max(size, 2 * B.shape[0]), A.dtype)

    # (a) one scan over the sorted members; children of one parent are adjacent
    f1 = 0
    n1 = 0
    multi = 0
    max_key = 0
    k = g_s
    while k <= g_e:
        cell = pss_cells[value_of(A[k], low_mask) + 1]
        p = value_of(cell, low_mask) - 1
        run = 1
        last_cell = cell
        while k + run <= g_e:
            sibling = pss_cells[value_of(A[k + run], low_mask) + 1]
            if value_of(sibling, low_mask) - 1 != p:
                break
            last_cell = sibling
            run += 1
        k += run
        if p < 0:
            continue
        finalist = is_marked(last_cell)
        if run == 1:
            if finalist:
                A[g_s + f1] = p
                f1 += 1
            else:
                n1 += 1
                B[size - n1] = p
        else:
            key = 2 * run
            if not finalist:
                key += 1
            B[2 * multi] = p
            B[2 * multi + 1] = key
            multi += 1
            if key > max_key:
                max_key = key

    # (b) N_1 behind F_1 (it sits reversed at the end of B), then a stable
    # counting sort of the parents with two or more children
    for t in range(n1):
        A[g_s + f1 + t] = B[size - 1 - t]
    base = g_s + f1 + n1
    if multi > 0:
        if key_counts.shape[0] < max_key + 1:
            key_counts = np.zeros(max(max_key + 1, 2 * key_counts.shape[0]), np.int64)
        for t in range(multi):
            key_counts[B[2 * t + 1]] += 1
        acc = 0
        for key in range(4, max_key + 1):
            c = key_counts[key]
            key_counts[key] = acc
            acc += c
        for t in range(multi):
            key = B[2 * t + 1]
            A[base + key_counts[key]] = B[2 * t]
            key_counts[key] += 1
        # key_counts[key] is now the end of key's bucket

    # (c) pull the group pointers of all parents next to each other
    parents = f1 + n1 + multi
    for t in range(parents):
        B[t] = I[A[g_s + t]]

    # (d) highest key first; odd keys go to strongly preliminary groups
    if multi > 0:
        off = f1 + n1
        for key in range(max_key, 3, -1):
            hi = key_counts[key]
            lo = key_counts[key - 1] if key > 4 else 0
            if hi > lo:
                elems = A[g_s + off + lo : g_s + off + hi]
                starts = B[off + lo : off + hi]
                if key & 1:
                    _reorder_preliminary_kernel(A, I, elems, starts)
                else:
                    _reorder_lyndon_kernel(A, I, elems, starts, low_mask, mark)
        for key in range(4, max_key + 1):
            key_counts[key] = 0
    if n1 > 0:
        _reorder_preliminary_kernel(A, I, A[g_s + f1 : g_s + f1 + n1], B[f1 : f1 + n1])
    if f1 > 0:
        _reorder_lyndon_kernel(A, I, A[g_s : g_s + f1], B[0:f1], low_mask, mark)
    return B, key_counts


@kernel
def _traverse_kernel(A, I, pss_cells, B, key_counts, c_count, low_mask, mark):
    n = A.shape[0]
    g_e = np.int64(n - 1)
    while g_e >= 0:
        g_s = np.int64(I[value_of(A[g_e], low_mask)])
        B, key_counts = _process_group_kernel(A, I, pss_cells, B, key_counts, g_s, g_e, low_mask, mark)
        # processed cells are free; the start list grows downward from the end of A
        A[n - 1 - c_count] = g_s
        c_count += 1
        g_e = g_s - 1
    return B, key_counts, c_count


@kernel
def _group_ids_kernel(A, I, starts):
    for r in range(starts.shape[0]):
        A[starts[r]] = r
    for s in range(I.shape[0]):
        I[s] = A[I[s]]


@dataclass(eq=False)
class Phase1State:
    A: np.ndarray
    I: np.ndarray
    width: IndexWidth
    B: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int32))
    key_counts: np.ndarray = field(default_factory=lambda: np.zeros(_INITIAL_SCRATCH, dtype=np.int64))
    c_count: int = 0

    @property
    def n(self) -> int:
        return int(self.A.shape[0])

    def processed_starts(self) -> list[int]:
        """Starts of the processed groups, in processing order."""
        if self.c_count == 0:
            return []
        return [int(v) for v in self.A[self.n - self.c_count :][::-1]]

    def group_start(self, s: int) -> int:
        return int(self.I[s])

    def cell(self, k: int) -> int:
        return int(self.A[k]) & self.width.empty

    def push_processed(self, g_s: int) -> None:
        self.A[self.n - 1 - self.c_count] = g_s
        self.c_count += 1


@dataclass(frozen=True, eq=False)
class LyndonGrouping:
    starts: np.ndarray
    group_of: np.ndarray

    @property
    def n(self) -> int:
        return int(self.group_of.shape[0])

    @property
    def group_count(self) -> int:
        return int(self.starts.shape[0])

    def sizes(self) -> np.ndarray:
        bounds = np.append(self.starts.astype(np.int64), self.n)
        return np.diff(bounds)

    def members(self) -> list[list[int]]:
        """Members of each group (ascending text positions), groups in ascending order."""
        order = np.argsort(self.group_of, kind="stable")
        cuts = np.cumsum(self.sizes())[:-1]
        return [part.tolist() for part in np.split(order, cuts)]


def initial_grouping(text: Text, mpss: MarkedPss, *, tracker: AllocationTracker | None = None) -> Phase1State:
    """Leaf-c bucket (Lyndon, context c) followed by inner-c bucket (strongly preliminary) per symbol c."""
    width = mpss.width
    n = text.n
    # A becomes the suffix array, so it is never counted as auxiliary memory
    A = np.empty(n, dtype=width.dtype)
    if tracker is None:
        I = np.empty(n, dtype=width.dtype)
    else:
        I = tracker.empty("group_pointers", n, width.dtype)
    _initial_grouping_kernel(text.symbols, mpss.cells, A, I, width.empty)
    return Phase1State(A=A, I=I, width=width, B=np.empty(_INITIAL_SCRATCH, dtype=width.dtype))


def reorder_into_lyndon(state: Phase1State, subbucket: Sequence[int]) -> None:
    elems = np.asarray(subbucket, dtype=state.width.dtype)
    if elems.shape[0] == 0:
        return
    starts = state.I[elems].copy()
    _reorder_lyndon_kernel(state.A, state.I, elems, starts, state.width.empty, state.width.mark)


def reorder_into_preliminary(state: Phase1State, subbucket: Sequence[int]) -> None:
    elems = np.asarray(subbucket, dtype=state.width.dtype)
    if elems.shape[0] == 0:
        return
    starts = state.I[elems].copy()
    _reorder_preliminary_kernel(state.A, state.I, elems, starts)


def process_group(state: Phase1State, g_s: int, g_e: int, mpss: MarkedPss) -> None:
    w = state.width
    state.B, state.key_counts = _process_group_kernel(
        state.A, state.I, mpss.cells, state.B, state.key_counts, g_s, g_e, w.empty, w.mark
    )
    state.push_processed(g_s)


def finalize_grouping(state: Phase1State, *, tracker: AllocationTracker | None = None) -> LyndonGrouping:
    """Turn the processed starts into ascending group ids; I is reused as the group map."""
    n = state.n
    starts = state.A[n - state.c_count :].copy()
    if tracker is not None:
        tracker.adopt("group_starts", starts)
    _group_ids_kernel(state.A, state.I, starts)
    return LyndonGrouping(starts=starts, group_of=state.I)


def run_phase1(
    state: Phase1State,
    mpss: MarkedPss,
    *,
    hook: Callable[[Phase1State, int, int], None] | None = None,
    tracker: AllocationTracker | None = None,
) -> LyndonGrouping:
    w = state.width
    if hook is None:
        state.B, state.key_counts, c_count = _traverse_kernel(
            state.A, state.I, mpss.cells, state.B, state.key_counts, state.c_count, w.empty, w.mark
        )
        state.c_count = int(c_count)
    else:
        g_e = state.n - 1
        while g_e >= 0:
            g_s = state.group_start(state.cell(g_e))
            process_group(state, g_s, g_e, mpss)
            hook(state, g_s, g_e)
            g_e = g_s - 1

    if tracker is not None:
        # B and key_counts only grow, so their final sizes are their peaks
        tracker.note_transient("phase1_scratch", state.B.nbytes + state.key_counts.nbytes)
    logger.debug("phase1: %d groups, scratch B=%d cells", state.c_count, state.B.shape[0])
    state.B = np.empty(0, dtype=w.dtype)
    state.key_counts = np.zeros(0, dtype=np.int64)
    return finalize_grouping(state, tracker=tracker)
