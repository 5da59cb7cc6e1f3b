from __future__ import annotations

import itertools

import numpy as np
import pytest

from lyndon_sa.oracles import canonical_lyndon_grouping, oracle_pss_nss
from lyndon_sa.saca.lyndon import build_marked_pss
from lyndon_sa.saca.phase1 import (
    Phase1State,
    initial_grouping,
    reorder_into_lyndon,
    reorder_into_preliminary,
    run_phase1,
)
from lyndon_sa.text import WIDTH_32, WIDTH_64, make_text

RUNNING = b"acedcebceece"
RUNNING_MEMBERS = [[12], [0], [6], [4, 10], [1], [7], [3], [2, 5, 8, 9, 11]]


def _setup(raw: bytes, width=WIDTH_32):
    text = make_text(raw)
    mpss = build_marked_pss(text, width)
    return text, mpss, initial_grouping(text, mpss)


def test_initial_grouping_running_example():
    _, _, state = _setup(RUNNING)
    A = state.A.tolist()
    assert A[0] == 12
    assert A[1] == 1 and A[2] == 1 and A[3] == 4
    assert A[7] == 3
    assert A[8:] == [2, 5, 8, 9, 11]
    expected_starts = {12: 0, 0: 1, 6: 2, 1: 3, 4: 3, 7: 3, 10: 3, 3: 7, 2: 8, 5: 8, 8: 8, 9: 8, 11: 8}
    assert {s: int(v) for s, v in enumerate(state.I)} == expected_starts


def test_initial_grouping_trivial_texts():
    _, _, state = _setup(b"")
    assert state.A.tolist() == [0]
    assert state.I.tolist() == [0]

    _, _, state = _setup(b"ab")
    assert int(state.A[0]) == 2
    assert int(state.A[1]) == 1
    assert int(state.A[2]) == 1
    assert state.I.tolist() == [1, 2, 0]


def test_reorders_replay_e_group_processing():
    _, _, state = _setup(RUNNING)

    reorder_into_lyndon(state, [7])
    assert int(state.A[3]) == 3
    assert int(state.A[6]) == 7
    assert int(state.I[7]) == 6

    reorder_into_preliminary(state, [1])
    assert int(state.A[3]) == 2
    assert int(state.A[5]) == 1
    assert int(state.I[1]) == 5

    reorder_into_lyndon(state, [4, 10])
    assert state.A[3:5].tolist() == [4, 10]
    assert int(state.I[4]) == 3 and int(state.I[10]) == 3
    # no marks survive a reorder
    assert (state.A[:7] >= 0).all()


def test_reorder_empty_subbucket_is_noop():
    _, _, state = _setup(RUNNING)
    before_a, before_i = state.A.copy(), state.I.copy()
    reorder_into_lyndon(state, [])
    reorder_into_preliminary(state, [])
    assert np.array_equal(state.A, before_a)
    assert np.array_equal(state.I, before_i)


def test_reorder_into_preliminary_splits_per_old_group():
    # groups of 0 (start 1) and 6 (start 2) are distinct singletons
    _, _, state = _setup(RUNNING)
    reorder_into_preliminary(state, [0, 6])
    assert int(state.I[0]) == 1 and int(state.A[1]) == 1
    assert int(state.I[6]) == 2 and int(state.A[2]) == 1


def test_run_phase1_running_example():
    _, mpss, state = _setup(RUNNING)
    grouping = run_phase1(state, mpss)
    assert grouping.starts.tolist() == [0, 1, 2, 3, 5, 6, 7, 8]
    assert grouping.members() == RUNNING_MEMBERS
    assert int(grouping.group_of[11]) == 7
    assert grouping.group_count == 8
    assert grouping.sizes().tolist() == [1, 1, 1, 2, 1, 1, 1, 5]


def test_run_phase1_processes_groups_top_down():
    _, mpss, state = _setup(RUNNING)
    seen: list[tuple[int, int]] = []
    run_phase1(state, mpss, hook=lambda st, g_s, g_e: seen.append((g_s, g_e)))
    assert seen == [(8, 12), (7, 7), (6, 6), (5, 5), (3, 4), (2, 2), (1, 1), (0, 0)]


def test_processed_starts_recorded_in_order():
    _, mpss, state = _setup(RUNNING)
    snapshots: list[list[int]] = []
    run_phase1(state, mpss, hook=lambda st, g_s, g_e: snapshots.append(st.processed_starts()))
    assert snapshots[-1] == [8, 7, 6, 5, 3, 2, 1, 0]


def test_run_phase1_single_symbol_text():
    _, mpss, state = _setup(b"")
    grouping = run_phase1(state, mpss)
    assert grouping.starts.tolist() == [0]
    assert grouping.group_of.tolist() == [0]


def _lyndon_prefixes(raw: bytes) -> list[tuple[int, ...]]:
    syms = list(raw) + [0]
    _, nss = oracle_pss_nss(syms)
    return [tuple(syms[i : nss[i]]) for i in range(len(syms))]


def _check_state(prefixes, state: Phase1State, g_s: int) -> None:
    group_start = state.I.astype(np.int64)
    cells = state.A.astype(np.int64) & state.width.empty
    groups: dict[int, list[int]] = {}
    for s in np.flatnonzero(group_start < g_s).tolist():
        groups.setdefault(int(group_start[s]), []).append(s)
    starts = sorted(groups)
    pos = 0
    for gs in starts:
        assert gs == pos
        pos += len(groups[gs])
    assert pos == g_s

    def is_lyndon_group(gs: int) -> bool:
        members = groups[gs]
        stored = cells[gs : gs + len(members)].tolist()
        return stored == members and len({prefixes[s] for s in members}) == 1

    for gs in starts:
        assert is_lyndon_group(gs) or int(cells[gs]) == len(groups[gs])
    if starts:
        # the next group the traversal reaches is always Lyndon
        assert is_lyndon_group(starts[-1])


@pytest.mark.parametrize("raw", [RUNNING, b"abab", b"mississippi", b"aabaabaab", b"cbacbacba", b"banana"])
def test_phase1_state_invariants_hold_after_every_group(raw):
    prefixes = _lyndon_prefixes(raw)
    text, mpss, state = _setup(raw)
    run_phase1(state, mpss, hook=lambda st, g_s, g_e: _check_state(prefixes, st, g_s))


def test_hook_path_and_kernel_path_agree():
    rng = np.random.default_rng(7)
    for _ in range(30):
        raw = bytes(rng.integers(97, 100, size=int(rng.integers(0, 60))).astype(np.uint8))
        _, mpss, fast = _setup(raw)
        _, _, slow = _setup(raw)
        a = run_phase1(fast, mpss)
        b = run_phase1(slow, mpss, hook=lambda *_: None)
        assert np.array_equal(a.starts, b.starts)
        assert np.array_equal(a.group_of, b.group_of)


def test_phase1_matches_canonical_grouping_exhaustive_small():
    for length in range(0, 8):
        for word in itertools.product(b"ab", repeat=length):
            raw = bytes(word)
            text, mpss, state = _setup(raw)
            grouping = run_phase1(state, mpss)
            canon = canonical_lyndon_grouping(text)
            assert grouping.members() == canon.members(), raw
            assert grouping.starts.tolist() == canon.starts, raw


def test_phase1_width_paths_agree():
    rng = np.random.default_rng(11)
    for _ in range(20):
        raw = bytes(rng.integers(97, 101, size=200).astype(np.uint8))
        _, mpss32, s32 = _setup(raw, WIDTH_32)
        _, mpss64, s64 = _setup(raw, WIDTH_64)
        g32 = run_phase1(s32, mpss32)
        g64 = run_phase1(s64, mpss64)
        assert g32.members() == g64.members()
