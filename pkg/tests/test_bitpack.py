import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from intzpack import bitpack


@st.composite
def block(draw, size):
    b = draw(st.integers(0, 32))
    vals = draw(st.lists(st.integers(0, (1 << b) - 1 if b else 0), min_size=size, max_size=size))
    return b, np.array(vals, dtype=np.uint32)


@given(block(32))
def test_scalar_pack_matches_bitstring(bv):
    b, vals = bv
    words = bitpack.pack_scalar32(vals, b)
    assert words.tolist() == oracle.pack_bits(vals.tolist(), b)
    assert bitpack.unpack_scalar32(words, b).tolist() == vals.tolist()


@given(block(128))
def test_vertical_pack_matches_lane_oracle(bv):
    b, vals = bv
    words = bitpack.pack_vertical128(vals, b)
    assert words.tolist() == oracle.pack_vertical(vals.tolist(), b)
    assert bitpack.unpack_vertical128(words, b).tolist() == vals.tolist()


def test_unpack_shift_example():
    # 32 five-bit values 0..31 fill exactly five words
    vals = np.arange(32, dtype=np.uint32)
    words = bitpack.pack_scalar32(vals, 5)
    assert words.size == 5
    # word 0 holds values 0..5 and the low two bits of value 6
    assert words[0] == sum(i << (5 * i) for i in range(6)) | (6 & 3) << 30
    assert bitpack.unpack_scalar32(words, 5).tolist() == list(range(32))


def test_width_zero_and_32():
    assert bitpack.pack_scalar32(np.zeros(32, np.uint32), 0).size == 0
    assert bitpack.unpack_scalar32([], 0).tolist() == [0] * 32
    full = np.full(128, 0xFFFFFFFF, np.uint32)
    assert np.array_equal(bitpack.unpack_vertical128(bitpack.pack_vertical128(full, 32), 32), full)


def test_masked_keeps_low_bits():
    vals = np.arange(100, 132, dtype=np.uint32)
    low = bitpack.unpack_scalar32(bitpack.pack_scalar32_masked(vals, 3), 3)
    assert np.array_equal(low, vals & 7)
    with pytest.raises(ValueError):
        bitpack.pack_scalar32(vals, 3)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        bitpack.pack_scalar32(np.zeros(31, np.uint32), 1)
    with pytest.raises(ValueError):
        bitpack.pack_scalar32(np.zeros(32, np.uint32), 33)
    with pytest.raises(ValueError):
        bitpack.unpack_vertical128(np.zeros(7, np.uint32), 2)
    with pytest.raises(ValueError):
        bitpack.pack_scalar32([-1] + [0] * 31, 4)


@given(st.lists(st.integers(0, 0xFFFFFFFF), max_size=50))
def test_max_bitwidth(vals):
    assert bitpack.max_bitwidth(vals) == max((oracle.bits(v) for v in vals), default=0)
