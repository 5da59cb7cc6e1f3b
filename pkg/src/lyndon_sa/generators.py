"""Deterministic test corpora.

Randomness comes from numpy's PCG64 bit generator seeded with the given seed;
raw 64-bit draws are reduced modulo sigma, so the same (kind, size, sigma,
seed, period) always yields the same bytes on every platform.
"""

from __future__ import annotations

import numpy as np

from lyndon_sa.config import GenConfig


def _alphabet_offset(sigma: int) -> int:
    # letters when they suffice, otherwise every nonzero byte value
    return ord("a") if sigma <= 26 else 1


def _random_symbols(size: int, sigma: int, seed: int) -> np.ndarray:
    if size == 0:
        return np.empty(0, dtype=np.uint8)
    raw = np.random.PCG64(seed).random_raw(size)
    return (raw % np.uint64(sigma) + np.uint64(_alphabet_offset(sigma))).astype(np.uint8)


def fibonacci_word(size: int) -> bytes:
    """Prefix of the Fibonacci word: s1 = a, s2 = ab, s_k = s_{k-1} s_{k-2}."""
    if size <= 0:
        return b""
    prev, cur = b"a", b"ab"
    while len(cur) < size:
        prev, cur = cur, cur + prev
    return (prev if size <= len(prev) else cur)[:size]


def random_text(size: int, sigma: int = 4, seed: int = 0) -> bytes:
    return _random_symbols(size, sigma, seed).tobytes()


def periodic_text(size: int, period: int = 64, sigma: int = 4, seed: int = 0) -> bytes:
    if size == 0:
        return b""
    block = _random_symbols(min(period, size), sigma, seed)
    reps = -(-size // block.shape[0])
    return np.tile(block, reps)[:size].tobytes()


def generate(cfg: GenConfig) -> bytes:
    if cfg.kind == "fibonacci":
        return fibonacci_word(cfg.size)
    if cfg.kind == "periodic":
        return periodic_text(cfg.size, period=cfg.period, sigma=cfg.sigma, seed=cfg.seed)
    return random_text(cfg.size, sigma=cfg.sigma, seed=cfg.seed)
