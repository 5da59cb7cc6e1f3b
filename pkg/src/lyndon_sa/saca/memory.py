"""Allocation tracking for the auxiliary-memory statistic.

The construction registers every working array it allocates here. The input
text and the output suffix array are never registered, so `peak_bytes` is the
peak of everything else that was alive at the same time.
"""

from __future__ import annotations

import logging

import numpy as np

logger = logging.getLogger(__name__)


class AllocationTracker:
    def __init__(self) -> None:
        self._live: dict[str, int] = {}
        self._current = 0
        self._peak = 0

    @property
    def current_bytes(self) -> int:
        return self._current

    @property
    def peak_bytes(self) -> int:
        return self._peak

    def live(self) -> dict[str, int]:
        return dict(self._live)

    def register(self, label: str, nbytes: int) -> None:
        """Record `label` as holding `nbytes`; re-registering a label resizes it."""
        previous = self._live.get(label, 0)
        self._live[label] = int(nbytes)
        self._current += int(nbytes) - previous
        if self._current > self._peak:
            self._peak = self._current
            logger.debug("aux peak %d bytes after %s", self._peak, label)

    def release(self, label: str) -> None:
        self._current -= self._live.pop(label, 0)

    def note_transient(self, label: str, nbytes: int) -> None:
        """Account for scratch that lived and died inside a kernel."""
        self.register(label, nbytes)
        self.release(label)

    def empty(self, label: str, size: int, dtype) -> np.ndarray:
        arr = np.empty(size, dtype=dtype)
        self.register(label, arr.nbytes)
        return arr

    def adopt(self, label: str, arr: np.ndarray) -> np.ndarray:
        self.register(label, arr.nbytes)
        return arr
