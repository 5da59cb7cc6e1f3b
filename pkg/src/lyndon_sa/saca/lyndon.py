"""Previous/next smaller suffixes and the marked pss array.

The marked pss array has n+1 cells. Cell k describes text position k-1 and
holds pss[k-1]+1, so the artificial root -1 lives in cell 0 and no value is
negative. The top bit of cell k is set iff position k-1 is the last child of
its parent in the pss-tree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lyndon_sa.saca.cells import is_marked, kernel, marked, value_of
from lyndon_sa.saca.memory import AllocationTracker
from lyndon_sa.text import IndexWidth, Text, choose_width


@kernel
def _pss_kernel(symbols, cells):
    # Left-to-right monotone stack over the pss chain of i-1. Each stacked
    # position also keeps the lcp with the position below it, so most pops
    # are decided without reading symbols. Returns the final stack capacity.
    n = symbols.shape[0]
    cap = 64
    pos = np.empty(cap, np.int64)
    lcp = np.empty(cap, np.int64)
    top = 0
    cells[0] = 0
    for i in range(n):
        parent = -1
        parent_lcp = 0
        if top > 0:
            j = pos[top - 1]
            k = 0
            while symbols[j + k] == symbols[i + k]:
                k += 1
            ell = k
            greater = symbols[j + k] > symbols[i + k]
            while True:
                if not greater:
                    parent = pos[top - 1]
                    parent_lcp = ell
                    break
                m = lcp[top - 1]
                top -= 1
                if top == 0:
                    break
                j = pos[top - 1]
                if m < ell:
                    # S_j agrees with the popped suffix up to m < ell, where it is smaller
                    ell = m
                    greater = False
                elif m == ell:
                    k = ell
                    while symbols[j + k] == symbols[i + k]:
                        k += 1
                    ell = k
                    greater = symbols[j + k] > symbols[i + k]
                # m > ell: S_j still exceeds S_i at ell
        cells[i + 1] = parent + 1
        if top == cap:
            cap *= 2
            grown_pos = np.empty(cap, np.int64)
            grown_lcp = np.empty(cap, np.int64)
            grown_pos[:top] = pos[:top]
            grown_lcp[:top] = lcp[:top]
            pos = grown_pos
            lcp = grown_lcp
        pos[top] = i
        lcp[top] = parent_lcp
        top += 1
    return cap


@kernel
def _mark_kernel(cells, low_mask, mark):
    # Right-to-left: the first child of p met is its last child. The parent's
    # cell flag doubles as a "child seen" bit until the scan reaches p itself.
    n = cells.shape[0] - 1
    for i in range(n - 1, -1, -1):
        p = value_of(cells[i + 1], low_mask)
        if is_marked(cells[p]):
            cells[i + 1] = value_of(cells[i + 1], low_mask)
        else:
            cells[p] = marked(cells[p], mark)
            cells[i + 1] = marked(cells[i + 1], mark)


@kernel
def _nss_kernel(parents, nss):
    # nss[i] = nss[last child of i], or i+1 for a leaf. Scanning right to left,
    # the first child met hands its nss to the parent.
    n = parents.shape[0]
    nss[:] = 0
    for i in range(n - 1, -1, -1):
        if nss[i] == 0:
            nss[i] = i + 1
        p = parents[i]
        if p >= 0 and nss[p] == 0:
            nss[p] = nss[i]


@dataclass(frozen=True, eq=False)
class MarkedPss:
    cells: np.ndarray
    width: IndexWidth

    @property
    def n(self) -> int:
        return int(self.cells.shape[0]) - 1

    def parents(self) -> np.ndarray:
        return (self.cells[1:].astype(np.int64) & self.width.empty) - 1

    def last_child_flags(self) -> np.ndarray:
        return self.cells[1:] < 0

    def parent(self, i: int) -> int:
        return (int(self.cells[i + 1]) & self.width.empty) - 1

    def is_last_child(self, i: int) -> bool:
        return int(self.cells[i + 1]) < 0

    def ps_set(self, i: int) -> list[int]:
        """Positions whose next smaller suffix is i, found by walking up from i-1."""
        if not 0 <= i < self.n:
            raise IndexError(f"position {i} outside [0, {self.n})")
        if i == 0 or self.parent(i) + 1 >= i:
            return []
        out = [i - 1]
        p = i - 1
        while self.is_last_child(p):
            p = self.parent(p)
            out.append(p)
        return out


@dataclass(frozen=True, eq=False)
class NssArray:
    values: np.ndarray

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def lyndon_lengths(self) -> np.ndarray:
        return self.values - np.arange(self.n, dtype=np.int64)


def _allocate_cells(n: int, width: IndexWidth, tracker: AllocationTracker | None) -> np.ndarray:
    if tracker is None:
        return np.empty(n + 1, dtype=width.dtype)
    return tracker.empty("pss", n + 1, width.dtype)


def build_marked_pss(text: Text, width: IndexWidth, tracker: AllocationTracker | None = None) -> MarkedPss:
    """Compute pss straight into shifted cells and add the last-child marks in place."""
    cells = _allocate_cells(text.n, width, tracker)
    stack_cap = _pss_kernel(text.symbols, cells)
    if tracker is not None:
        tracker.note_transient("pss_stack", int(stack_cap) * 16)
    _mark_kernel(cells, width.empty, width.mark)
    return MarkedPss(cells=cells, width=width)


def compute_pss(text: Text) -> np.ndarray:
    """pss[i] = max({j < i : S_j < S_i} | {-1})."""
    width = choose_width(text.n)
    cells = _allocate_cells(text.n, width, None)
    _pss_kernel(text.symbols, cells)
    return cells[1:].astype(np.int64) - 1


def mark_last_children(pss, width: IndexWidth | None = None) -> MarkedPss:
    parents = np.asarray(pss, dtype=np.int64)
    n = int(parents.shape[0])
    width = width or choose_width(max(n, 1))
    cells = np.empty(n + 1, dtype=width.dtype)
    cells[0] = 0
    cells[1:] = parents + 1
    _mark_kernel(cells, width.empty, width.mark)
    return MarkedPss(cells=cells, width=width)


def derive_nss(pss) -> NssArray:
    parents = pss.parents() if isinstance(pss, MarkedPss) else np.asarray(pss, dtype=np.int64)
    nss = np.empty(parents.shape[0], dtype=np.int64)
    _nss_kernel(parents, nss)
    return NssArray(values=nss)


def lyndon_lengths(nss: NssArray) -> np.ndarray:
    return nss.lyndon_lengths()
