from __future__ import annotations

import numpy as np
import pytest

from lyndon_sa.oracles import brute_force_sa, canonical_lyndon_grouping, oracle_pss_nss
from lyndon_sa.saca.lyndon import build_marked_pss
from lyndon_sa.saca.phase1 import LyndonGrouping, initial_grouping, run_phase1
from lyndon_sa.saca.phase2 import run_phase2_bfs, run_phase2_reference
from lyndon_sa.text import WIDTH_32, SentinelPolicy, make_text

RUNNING = b"acedcebceece"
RUNNING_SA = [12, 0, 6, 10, 4, 1, 7, 3, 11, 5, 9, 2, 8]
CAPACITIES = [1, 2, 3, 64, 1024]


def _grouping(raw: bytes, policy=SentinelPolicy.STRICT):
    text = make_text(raw, policy)
    mpss = build_marked_pss(text, WIDTH_32)
    return text, mpss, run_phase1(initial_grouping(text, mpss), mpss)


def _oracle_grouping(text) -> LyndonGrouping:
    canon = canonical_lyndon_grouping(text)
    group_of = np.empty(text.n, dtype=np.int32)
    for r, members in enumerate(canon.members()):
        group_of[members] = r
    return LyndonGrouping(starts=np.array(canon.starts, dtype=np.int32), group_of=group_of)


@pytest.mark.parametrize("capacity", CAPACITIES)
def test_bfs_running_example(capacity):
    _, mpss, grouping = _grouping(RUNNING)
    assert run_phase2_bfs(grouping, mpss, capacity).tolist() == RUNNING_SA


def test_reference_running_example():
    _, mpss, grouping = _grouping(RUNNING)
    assert run_phase2_reference(grouping, mpss).tolist() == RUNNING_SA


def test_trivial_texts():
    _, mpss, grouping = _grouping(b"")
    assert run_phase2_bfs(grouping, mpss).tolist() == [0]
    assert run_phase2_reference(grouping, mpss).tolist() == [0]

    _, mpss, grouping = _grouping(b"a")
    assert grouping.members() == [[1], [0]]
    assert run_phase2_bfs(grouping, mpss, 1).tolist() == [1, 0]


def test_phase2_leaves_inputs_untouched_without_reuse():
    _, mpss, grouping = _grouping(RUNNING)
    starts = grouping.starts.copy()
    run_phase2_bfs(grouping, mpss, 4)
    assert np.array_equal(grouping.starts, starts)


def test_phase2_output_has_no_marks():
    _, mpss, grouping = _grouping(b"mississippi")
    sa = run_phase2_bfs(grouping, mpss, 2, debug=True)
    assert (sa.indices >= 0).all()
    assert sorted(sa.tolist()) == list(range(12))


def test_phase2_from_oracle_grouping():
    for raw in (RUNNING, b"abab", b"banana", b"aaaaab"):
        text = make_text(raw)
        mpss = build_marked_pss(text, WIDTH_32)
        grouping = _oracle_grouping(text)
        assert run_phase2_bfs(grouping, mpss, 3).tolist() == brute_force_sa(text)


def test_queue_capacity_independence_randomized():
    rng = np.random.default_rng(2024)
    for _ in range(40):
        sigma = int(rng.choice([1, 2, 4, 26]))
        raw = bytes((97 + rng.integers(0, sigma, size=int(rng.integers(1, 400)))).astype(np.uint8))
        _, mpss, grouping = _grouping(raw)
        reference = run_phase2_reference(grouping, mpss).tolist()
        for capacity in CAPACITIES:
            assert run_phase2_bfs(grouping, mpss, capacity).tolist() == reference


def test_inserted_chain_is_ps_set():
    # each marked entry i pulls in exactly the suffixes whose nss is i
    text = make_text(RUNNING)
    _, nss = oracle_pss_nss(text)
    mpss = build_marked_pss(text, WIDTH_32)
    for i in range(text.n):
        assert set(mpss.ps_set(i)) == {j for j in range(i) if nss[j] == i}


def test_capacity_must_be_positive():
    _, mpss, grouping = _grouping(RUNNING)
    with pytest.raises(ValueError):
        run_phase2_bfs(grouping, mpss, 0)


def test_checksum_is_width_independent():
    text = make_text(RUNNING)
    mpss = build_marked_pss(text, WIDTH_32)
    sa = run_phase2_bfs(run_phase1(initial_grouping(text, mpss), mpss), mpss)
    wide = np.array(RUNNING_SA, dtype=np.int64)
    assert sa.checksum() == type(sa)(indices=wide).checksum()
    assert sa.without_sentinel().tolist() == RUNNING_SA[1:]
