from __future__ import annotations

import pytest

from lyndon_sa.errors import EmptyWordError, OracleSizeError
from lyndon_sa.oracles import (
    brute_force_sa,
    canonical_lyndon_grouping,
    is_lyndon,
    oracle_ps_set,
    oracle_pss_nss,
)
from lyndon_sa.text import SentinelPolicy, make_text

RUNNING = b"acedcebceece"


def _ctx(s: str) -> tuple[int, ...]:
    return tuple(ord(c) if c != "$" else 0 for c in s)


def test_brute_force_sa_examples():
    assert brute_force_sa(make_text(RUNNING)) == [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8]
    assert brute_force_sa(make_text(b"")) == [0]
    assert brute_force_sa(make_text(b"aaa")) == [3, 2, 1, 0]


def test_brute_force_sa_remapped_text():
    # remapped symbols go beyond one byte; 0x00 must still sort below 0x01
    text = make_text(b"\x01\x00\x01", SentinelPolicy.REMAP)
    assert brute_force_sa(text) == [3, 1, 2, 0]


def test_oracle_pss_nss():
    pss, nss = oracle_pss_nss(make_text(RUNNING))
    assert pss == [-1, 0, 1, 1, 0, 4, 0, 6, 7, 7, 6, 10, -1]
    assert nss == [12, 4, 3, 4, 6, 6, 12, 10, 9, 10, 12, 12, 13]
    assert oracle_pss_nss(make_text(b"")) == ([-1], [1])
    assert oracle_pss_nss(make_text(b"ab")) == ([-1, 0, -1], [2, 2, 3])


def test_is_lyndon():
    assert is_lyndon("cee")
    assert is_lyndon("a")
    assert not is_lyndon("ba")
    assert not is_lyndon("abab")
    assert is_lyndon([1, 2, 1, 3])
    with pytest.raises(EmptyWordError):
        is_lyndon("")


def test_canonical_grouping_running_example():
    grouping = canonical_lyndon_grouping(make_text(RUNNING))
    assert grouping.contexts() == [
        _ctx("$"),
        _ctx("acedcebceece"),
        _ctx("bceece"),
        _ctx("ce"),
        _ctx("ced"),
        _ctx("cee"),
        _ctx("d"),
        _ctx("e"),
    ]
    assert grouping.members() == [[12], [0], [6], [4, 10], [1], [7], [3], [2, 5, 8, 9, 11]]
    assert grouping.starts == [0, 1, 2, 3, 5, 6, 7, 8]
    assert all(is_lyndon(ctx) for ctx in grouping.contexts())


def test_canonical_grouping_small():
    assert canonical_lyndon_grouping(make_text(b"")).members() == [[0]]
    grouping = canonical_lyndon_grouping(make_text(b"abab"))
    assert grouping.contexts() == [_ctx("$"), _ctx("ab"), _ctx("b")]
    assert grouping.members() == [[4], [0, 2], [1, 3]]


def test_oracle_ps_set():
    text = make_text(RUNNING)
    assert oracle_ps_set(text, 4) == {1, 3}
    assert oracle_ps_set(text, 6) == {4, 5}
    assert oracle_ps_set(text, 0) == set()


def test_ps_sets_partition_all_but_last():
    text = make_text(b"mississippi")
    seen: list[int] = []
    for i in range(text.n):
        seen.extend(oracle_ps_set(text, i))
    assert sorted(seen) == list(range(text.n - 1))


def test_oracle_size_guard():
    with pytest.raises(OracleSizeError):
        brute_force_sa([1] * 100_000 + [0, 0])
