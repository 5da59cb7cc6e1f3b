"""Brute-force references for the construction.

Everything here works from the definitions with plain Python comparisons and
shares no code with `lyndon_sa.saca`. All of it is at least quadratic, so a
size guard refuses large texts.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from lyndon_sa.errors import EmptyWordError, OracleSizeError
from lyndon_sa.text import Text

MAX_ORACLE_N = 100_000


@dataclass(frozen=True)
class CanonicalGrouping:
    # (context, ascending members), contexts in increasing lexicographic order
    groups: list[tuple[tuple[int, ...], list[int]]]

    @property
    def starts(self) -> list[int]:
        out: list[int] = []
        pos = 0
        for _, members in self.groups:
            out.append(pos)
            pos += len(members)
        return out

    def members(self) -> list[list[int]]:
        return [list(m) for _, m in self.groups]

    def contexts(self) -> list[tuple[int, ...]]:
        return [ctx for ctx, _ in self.groups]


def _symbols(text: Text | Sequence[int], limit: int = MAX_ORACLE_N) -> list[int]:
    raw = text.symbols if isinstance(text, Text) else text
    syms = [int(c) for c in np.asarray(raw).tolist()]
    if len(syms) > limit:
        raise OracleSizeError(f"oracle refuses n={len(syms)} (limit {limit})")
    return syms


def brute_force_sa(text: Text | Sequence[int]) -> list[int]:
    s = _symbols(text)
    n = len(s)
    if isinstance(text, Text) and text.symbols.dtype == np.uint8:
        data = bytes(s)
        return sorted(range(n), key=lambda i: data[i:])
    # 16-bit symbols: big-endian pairs keep bytewise order equal to symbol order
    wide = np.asarray(s, dtype=">u2").tobytes()
    return sorted(range(n), key=lambda i: wide[2 * i :])


def oracle_pss_nss(text: Text | Sequence[int]) -> tuple[list[int], list[int]]:
    s = _symbols(text)
    n = len(s)
    rank = [0] * n
    for r, i in enumerate(brute_force_sa(text)):
        rank[i] = r
    pss = [-1] * n
    nss = [n] * n
    for i in range(n):
        for j in range(i - 1, -1, -1):
            if rank[j] < rank[i]:
                pss[i] = j
                break
        for j in range(i + 1, n):
            if rank[j] < rank[i]:
                nss[i] = j
                break
    return pss, nss


def is_lyndon(word: Sequence[int] | str) -> bool:
    w = [ord(c) for c in word] if isinstance(word, str) else [int(c) for c in word]
    if not w:
        raise EmptyWordError()
    return all(w < w[k:] for k in range(1, len(w)))


def canonical_lyndon_grouping(text: Text | Sequence[int]) -> CanonicalGrouping:
    s = _symbols(text)
    sa = brute_force_sa(text)
    _, nss = oracle_pss_nss(s)
    groups: list[tuple[tuple[int, ...], list[int]]] = []
    previous: tuple[int, ...] | None = None
    for i in sa:
        prefix = tuple(s[i : nss[i]])
        if prefix != previous:
            groups.append((prefix, []))
            previous = prefix
        groups[-1][1].append(i)
    return CanonicalGrouping(groups=[(ctx, sorted(members)) for ctx, members in groups])


def oracle_ps_set(text: Text | Sequence[int], i: int) -> set[int]:
    s = _symbols(text)
    if not 0 <= i < len(s):
        raise IndexError(f"position {i} outside [0, {len(s)})")
    _, nss = oracle_pss_nss(s)
    return {j for j in range(i) if nss[j] == i}
