import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from intzpack import basic
from intzpack.errors import CorruptStreamError

# mixes of tiny and large values exercise every byte length
mixed = st.lists(
    st.one_of(st.integers(0, 300), st.integers(0, 0xFFFFFFFF)), max_size=300
)


# Variable Byte ----------------------------------------------------------------

def test_vbyte_examples():
    assert basic.vbyte_encode([200]) == bytes([0x48, 0x81])
    assert basic.vbyte_encode([0, 127, 128]) == bytes([0x80, 0xFF, 0x00, 0x81])
    assert basic.vbyte_encode([0xFFFFFFFF])[-1] == 0x8F


@given(mixed)
def test_vbyte_matches_oracle(vals):
    data = basic.vbyte_encode(vals)
    assert data == oracle.vbyte(vals)
    assert basic.vbyte_decode(data, len(vals)).tolist() == vals


def test_vbyte_corrupt():
    with pytest.raises(CorruptStreamError):
        basic.vbyte_decode(bytes([0x01, 0x02]), 1)  # never terminates
    with pytest.raises(CorruptStreamError):
        basic.vbyte_decode(bytes([0] * 5 + [0x81]), 1)  # six bytes
    with pytest.raises(CorruptStreamError):
        basic.vbyte_decode(bytes([0x7F] * 4 + [0x9F]), 1)  # 35 bits


@given(mixed)
def test_vbyte_words_roundtrip(vals):
    w = basic.vbyte_encode_words(np.array(vals, np.uint32))
    out = np.empty(len(vals), np.uint32)
    assert basic.vbyte_decode_words(w, 0, len(vals), out) == w.size
    assert out.tolist() == vals


# varint-G8IU -------------------------------------------------------------------

def test_g8iu_group_example():
    # 2**15, 2**23 and 2**7 take 2, 3 and 1 bytes; the last two bytes are padding
    data = basic.g8iu_encode([1 << 15, 1 << 23, 1 << 7])
    assert len(data) == 9
    assert data[0] == 0xCD
    assert data[1:7] == bytes([0x00, 0x80, 0x00, 0x00, 0x80, 0x80])
    assert data[7:9] == bytes(2)
    # a fourth, four-byte integer no longer fits and opens a new group
    assert len(basic.g8iu_encode([1 << 15, 1 << 23, 1 << 7, 1 << 31])) == 18


def test_g8iu_integer_never_straddles_groups():
    data = basic.g8iu_encode([0x01020304, 0x01020304, 5])
    assert len(data) == 18
    assert data[0] == 0b01110111
    assert data[9] == 0xFE


@given(mixed)
def test_g8iu_matches_oracle(vals):
    data = basic.g8iu_encode(vals)
    assert len(data) % 9 == 0
    assert oracle.g8iu_decode(data, len(vals)) == vals
    assert basic.g8iu_decode(data, len(vals)).tolist() == vals


def test_g8iu_corrupt():
    with pytest.raises(CorruptStreamError):
        basic.g8iu_decode(bytes([0xFE]) + bytes(8), 2)  # second group missing
    with pytest.raises(CorruptStreamError):
        basic.g8iu_decode(bytes([0xDF]) + bytes(8), 1)  # six-byte integer


# Simple-8b ----------------------------------------------------------------------

def test_simple8b_240_zeros_is_one_word():
    w = basic.simple8b_encode(np.zeros(240, np.uint64))
    assert w.size == 2 and w[1] >> 28 == 0
    assert basic.simple8b_decode(w, 240).tolist() == [0] * 240


def test_simple8b_120_zeros_and_full_word():
    w = basic.simple8b_encode(np.zeros(120, np.uint64))
    assert w.size == 2 and w[1] >> 28 == 1
    w = basic.simple8b_encode([(1 << 60) - 1])
    assert w.tolist() == [0xFFFFFFFF, 0xFFFFFFFF]


def test_simple8b_selector_table():
    assert basic.SIMPLE8B_SELECTORS == tuple(map(tuple, oracle.SIMPLE8B))
    for count, b in oracle.SIMPLE8B[2:]:
        assert count * b <= 60


def test_simple8b_greedy_choice():
    # sixty ones fit selector 2; a leading 3 forces width 2 for the first thirty
    w = basic.simple8b_encode([1] * 60)
    assert w.size == 2 and w[1] >> 28 == 2
    w = basic.simple8b_encode([3] + [1] * 59)
    assert (w[1] >> 28) == 3 and w.size == 4


@given(st.lists(st.one_of(st.just(0), st.integers(0, 15), st.integers(0, (1 << 60) - 1)), max_size=500))
def test_simple8b_matches_oracle(vals):
    w = basic.simple8b_encode(np.array(vals, np.uint64))
    assert oracle.simple8b_decode(w.tolist(), len(vals)) == vals
    assert basic.simple8b_decode(w, len(vals)).tolist() == vals


def test_simple8b_rejects_wide_values():
    with pytest.raises(ValueError):
        basic.simple8b_encode([1 << 60])


def test_simple8b_truncated():
    w = basic.simple8b_encode(np.arange(100, dtype=np.uint64))
    with pytest.raises(CorruptStreamError):
        basic.simple8b_decode(w[:-2], 100)
