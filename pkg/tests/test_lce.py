import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polytile.lce import LceIndex, naive_lce


def test_examples():
    idx = LceIndex("ururu")
    assert len(idx) == 5
    assert idx.lce(1, 3) == 3
    assert idx.lce(2, 2) == 4
    assert LceIndex("ud").lce(1, 2) == 0


def test_empty_text():
    with pytest.raises(ValueError):
        LceIndex("")


@pytest.mark.parametrize("i,j", [(0, 1), (1, 6), (-1, 2)])
def test_out_of_range(i, j):
    with pytest.raises(IndexError):
        LceIndex("ururu").lce(i, j)


def test_single_letter():
    assert LceIndex("u").lce(1, 1) == 1


def test_random_triples_against_scan():
    rng = random.Random(7)
    for _ in range(10_000):
        text = "".join(rng.choice("udlr"[: rng.randint(1, 4)]) for _ in range(rng.randint(1, 512)))
        idx = LceIndex(text)
        i = rng.randint(1, len(text))
        j = rng.randint(1, len(text))
        k = idx.lce(i, j)
        assert k == naive_lce(text, i, j)
        assert k == idx.lce(j, i)
        assert k <= len(text) - max(i, j) + 1
        if i + k <= len(text) and j + k <= len(text) and i != j:
            assert text[i + k - 1] != text[j + k - 1]


@settings(max_examples=200)
@given(st.text(alphabet="udlr", min_size=1, max_size=300), st.data())
def test_batched_matches_scalar(text, data):
    idx = LceIndex(text)
    n = len(text)
    pos = st.integers(1, n)
    i = data.draw(st.lists(pos, min_size=1, max_size=30))
    j = data.draw(st.lists(pos, min_size=len(i), max_size=len(i)))
    got = idx.lce_many(np.array(i), np.array(j))
    assert got.tolist() == [idx.lce(a, b) for a, b in zip(i, j)]


@given(st.text(alphabet="udlr", min_size=1, max_size=60), st.text(alphabet="udlr", min_size=1, max_size=60), st.data())
def test_pair_is_order_independent(x, y, data):
    xy, oy = LceIndex.pair(x, y)
    yx, ox = LceIndex.pair(y, x)
    i = data.draw(st.integers(1, len(x)))
    j = data.draw(st.integers(1, len(y)))
    k = xy.lce(i, oy + j)
    assert k == yx.lce(ox + i, j)
    assert k == naive_lce(x + "#" + y, i, len(x) + 1 + j)


def test_separator_rejected():
    with pytest.raises(ValueError):
        LceIndex.pair("u\x00", "r")
