from __future__ import annotations

import numpy as np
import pytest

from lyndon_sa.errors import SaFormatError
from lyndon_sa.formats import read_sa, resolve_read_format, resolve_write_format, write_sa

SA = np.array([0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8], dtype=np.int32)


def test_text_format_is_newline_terminated(tmp_path):
    path = tmp_path / "sa.txt"
    assert write_sa(path, SA) == "text"
    assert path.read_text(encoding="ascii") == "".join(f"{v}\n" for v in SA.tolist())
    assert read_sa(path, 12).tolist() == SA.tolist()


def test_raw_formats_are_little_endian(tmp_path):
    p32 = tmp_path / "sa.bin"
    assert write_sa(p32, SA) == "raw32"
    assert p32.read_bytes() == SA.astype("<u4").tobytes()
    assert p32.read_bytes()[:8] == bytes([0, 0, 0, 0, 6, 0, 0, 0])

    p64 = tmp_path / "sa.raw64"
    assert write_sa(p64, SA, "raw64") == "raw64"
    assert p64.stat().st_size == 8 * 12
    assert read_sa(p64, 12).tolist() == SA.tolist()
    assert resolve_read_format("auto", p64, 12) == "raw64"
    assert resolve_read_format("auto", p32, 12) == "raw32"


def test_empty_array(tmp_path):
    path = tmp_path / "empty.bin"
    write_sa(path, np.empty(0, dtype=np.int64))
    assert path.read_bytes() == b""
    assert read_sa(path, 0).tolist() == []


def test_auto_write_format_choice(tmp_path):
    assert resolve_write_format("auto", tmp_path / "x.txt", 5) == "text"
    assert resolve_write_format("auto", tmp_path / "x.sa", 5) == "raw32"
    assert resolve_write_format("auto", tmp_path / "x.sa", 2**31 - 1) == "raw64"
    assert resolve_write_format("raw64", tmp_path / "x.txt", 5) == "raw64"


def test_wrong_length_is_format_error(tmp_path):
    path = tmp_path / "sa.txt"
    write_sa(path, SA)
    with pytest.raises(SaFormatError):
        read_sa(path, 13)

    raw = tmp_path / "sa.bin"
    raw.write_bytes(b"\x00" * 10)
    with pytest.raises(SaFormatError):
        read_sa(raw, 12)
    with pytest.raises(SaFormatError):
        read_sa(raw, 2, "raw32")


def test_double_length_raw32_is_not_read_as_raw64(tmp_path):
    path = tmp_path / "sa.bin"
    write_sa(path, np.concatenate([SA, SA]), "raw32")
    assert path.stat().st_size == 8 * 12
    with pytest.raises(SaFormatError):
        resolve_read_format("auto", path, 12)
    with pytest.raises(SaFormatError):
        read_sa(path, 12)


def test_garbage_text_is_format_error(tmp_path):
    path = tmp_path / "sa.txt"
    path.write_text("1\nxyz\n", encoding="ascii")
    with pytest.raises(SaFormatError):
        read_sa(path, 2)
