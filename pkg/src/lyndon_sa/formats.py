"""On-disk suffix array formats.

raw32 / raw64: little-endian unsigned integers, no header.
text: one decimal index per line, every line newline-terminated.
The files hold the suffix array of the raw input, without the terminal entry.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from lyndon_sa.errors import SaFormatError, WidthTooSmallError

RAW32_MAX = (1 << 31) - 2

_RAW_DTYPES = {"raw32": np.dtype("<u4"), "raw64": np.dtype("<u8")}


def resolve_write_format(fmt: str, path: Path, m: int) -> str:
    if fmt != "auto":
        return fmt
    if path.suffix == ".txt":
        return "text"
    return "raw32" if m <= RAW32_MAX else "raw64"


def resolve_read_format(fmt: str, path: Path, m: int) -> str:
    if fmt != "auto":
        return fmt
    if path.suffix == ".txt":
        return "text"
    size = path.stat().st_size
    if size == 4 * m:
        return "raw32"
    if size == 8 * m:
        # 2m raw32 entries also take 8m bytes; read as raw64 every entry of a
        # real raw64 file is below m, while nonzero high words of a raw32 pair are not
        if int(np.fromfile(path, dtype=_RAW_DTYPES["raw64"]).max()) < m:
            return "raw64"
        raise SaFormatError(f"{path}: holds {2 * m} raw32 entries, expected {m}")
    raise SaFormatError(f"{path}: {size} bytes is neither a raw32 nor a raw64 array of {m} entries")


def write_sa(path: Path, indices: np.ndarray, fmt: str = "auto") -> str:
    """Write `indices` and return the concrete format used."""
    m = int(indices.shape[0])
    fmt = resolve_write_format(fmt, path, m)
    if fmt == "text":
        body = "".join(f"{int(v)}\n" for v in indices.tolist())
        path.write_text(body, encoding="ascii")
        return fmt
    if fmt == "raw32" and m > RAW32_MAX:
        raise WidthTooSmallError(f"WIDTH_TOO_SMALL: {m} entries do not fit raw32")
    path.write_bytes(np.asarray(indices).astype(_RAW_DTYPES[fmt]).tobytes())
    return fmt


def read_sa(path: Path, m: int, fmt: str = "auto") -> np.ndarray:
    """Read a suffix array that must have exactly `m` entries."""
    fmt = resolve_read_format(fmt, path, m)
    if fmt == "text":
        try:
            tokens = path.read_text(encoding="ascii").split()
            values = np.array([int(tok) for tok in tokens], dtype=np.int64)
        except (ValueError, OverflowError) as e:
            raise SaFormatError(f"{path}: {e}")
    else:
        data = path.read_bytes()
        itemsize = _RAW_DTYPES[fmt].itemsize
        if len(data) % itemsize:
            raise SaFormatError(f"{path}: {len(data)} bytes is not a whole number of {fmt} entries")
        values = np.frombuffer(data, dtype=_RAW_DTYPES[fmt]).astype(np.int64)
    if values.shape[0] != m:
        raise SaFormatError(f"{path}: expected {m} entries, found {values.shape[0]}")
    return values
