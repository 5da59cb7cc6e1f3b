"""Input texts, sentinel policies and index widths.

Every text handed to the construction ends in a unique minimal symbol, so two
different suffixes always differ before either one runs out.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from lyndon_sa.errors import InputContainsNulError, InputTooLargeError, WidthTooSmallError


class SentinelPolicy(str, Enum):
    # append a 0 byte; the input must not contain one
    STRICT = "strict"
    # shift every byte up by one into 16-bit codes, then append 0
    REMAP = "remap"


@dataclass(frozen=True)
class IndexWidth:
    bits: int

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.int32) if self.bits == 32 else np.dtype(np.int64)

    @property
    def empty(self) -> int:
        """Largest unmarked cell value; reserved for unset cells."""
        return (1 << (self.bits - 1)) - 1

    @property
    def mark(self) -> int:
        """The top bit of a cell, as a signed value (cells are signed, so marked cells are negative)."""
        return -(1 << (self.bits - 1))

    @property
    def max_representable(self) -> int:
        return (1 << (self.bits - 1)) - 2

    @property
    def cell_bytes(self) -> int:
        return self.bits // 8


WIDTH_32 = IndexWidth(32)
WIDTH_64 = IndexWidth(64)


def choose_width(n: int) -> IndexWidth:
    if n < 1:
        raise ValueError("text length must be at least 1")
    if n <= WIDTH_32.max_representable:
        return WIDTH_32
    if n <= WIDTH_64.max_representable:
        return WIDTH_64
    raise InputTooLargeError()


def width_for_bits(bits: int | None, n: int) -> IndexWidth:
    """Resolve an optional forced width against the text length."""
    if bits is None:
        return choose_width(n)
    width = WIDTH_32 if bits == 32 else WIDTH_64 if bits == 64 else None
    if width is None:
        raise ValueError(f"unsupported index width: {bits}")
    if n > width.max_representable:
        raise WidthTooSmallError(
            f"WIDTH_TOO_SMALL: n={n} exceeds the {bits}-bit bound of {width.max_representable}"
        )
    return width


@dataclass(frozen=True, eq=False)
class Text:
    symbols: np.ndarray
    policy: SentinelPolicy = SentinelPolicy.STRICT

    @property
    def n(self) -> int:
        return int(self.symbols.shape[0])

    def __len__(self) -> int:
        return self.n

    def validate(self) -> None:
        """Check the unique-minimal-terminal contract."""
        if self.n < 1:
            raise ValueError("text must contain at least the terminal symbol")
        if self.n > 1 and int(self.symbols[:-1].min()) <= int(self.symbols[-1]):
            raise ValueError("last symbol must be strictly smaller than every other symbol")

    def to_bytes(self) -> bytes:
        """Recover the raw input (drops the sentinel, undoes the remap)."""
        body = self.symbols[:-1]
        if self.policy is SentinelPolicy.REMAP:
            body = (body - 1).astype(np.uint8)
        return body.astype(np.uint8).tobytes()

    @classmethod
    def from_symbols(cls, symbols, policy: SentinelPolicy = SentinelPolicy.STRICT) -> Text:
        """Wrap an already terminated symbol sequence (tests, oracles, generators)."""
        arr = np.asarray(symbols)
        dtype = np.uint8 if policy is SentinelPolicy.STRICT else np.uint16
        text = cls(symbols=arr.astype(dtype, copy=False), policy=policy)
        text.validate()
        return text


def make_text(raw: bytes | bytearray | memoryview | str, policy: SentinelPolicy | str = SentinelPolicy.STRICT) -> Text:
    policy = SentinelPolicy(policy)
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    data = np.frombuffer(bytes(raw), dtype=np.uint8)
    m = int(data.shape[0])
    if m + 1 > WIDTH_64.max_representable:
        raise InputTooLargeError()

    if policy is SentinelPolicy.STRICT:
        if m and not data.all():
            pos = int(np.flatnonzero(data == 0)[0])
            raise InputContainsNulError(f"INPUT_CONTAINS_NUL: zero byte at offset {pos}; use the remap policy")
        symbols = np.empty(m + 1, dtype=np.uint8)
        symbols[:m] = data
    else:
        symbols = np.empty(m + 1, dtype=np.uint16)
        symbols[:m] = data
        symbols[:m] += 1
    symbols[m] = 0
    return Text(symbols=symbols, policy=policy)
