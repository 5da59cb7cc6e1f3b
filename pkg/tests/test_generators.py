from __future__ import annotations

import pytest
from pydantic import ValidationError

from lyndon_sa.config import GenConfig
from lyndon_sa.generators import fibonacci_word, generate, periodic_text, random_text


def test_fibonacci_prefix():
    assert fibonacci_word(13) == b"abaababaabaab"
    assert fibonacci_word(1) == b"a"
    assert fibonacci_word(0) == b""
    assert fibonacci_word(100)[:13] == b"abaababaabaab"
    assert len(fibonacci_word(1000)) == 1000


def test_random_text_is_deterministic_and_in_alphabet():
    a = random_text(5000, sigma=4, seed=9)
    assert a == random_text(5000, sigma=4, seed=9)
    assert a != random_text(5000, sigma=4, seed=10)
    assert set(a) <= set(b"abcd")
    assert random_text(0) == b""


def test_random_text_wide_alphabet_avoids_zero():
    data = random_text(20000, sigma=255, seed=1)
    assert 0 not in data
    assert len(set(data)) > 200


def test_periodic_text_repeats_block():
    data = periodic_text(1000, period=7, sigma=3, seed=2)
    assert len(data) == 1000
    assert all(data[i] == data[i % 7] for i in range(1000))
    assert periodic_text(5, period=64, seed=2) == periodic_text(200, period=64, seed=2)[:5]


def test_generate_dispatch():
    assert generate(GenConfig(kind="fibonacci", size=13)) == b"abaababaabaab"
    assert generate(GenConfig(kind="random", size=0)) == b""
    assert len(generate(GenConfig(kind="periodic", size=300, period=10))) == 300


def test_gen_config_bounds():
    with pytest.raises(ValidationError):
        GenConfig(kind="random", size=-1)
    with pytest.raises(ValidationError):
        GenConfig(kind="random", size=1, sigma=0)
    with pytest.raises(ValidationError):
        GenConfig(kind="random", size=1, sigma=256)
    with pytest.raises(ValidationError):
        GenConfig(kind="zipf", size=1)
