import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from intzpack import binpack
from intzpack.errors import CorruptStreamError


@st.composite
def block_deltas(draw, max_blocks=40):
    nblocks = draw(st.integers(0, max_blocks))
    widths = draw(st.lists(st.integers(0, 32), min_size=nblocks, max_size=nblocks))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    parts = [rng.integers(0, 1 << w, 128, dtype=np.uint64) if w else np.zeros(128, np.uint64)
             for w in widths]
    return np.concatenate(parts).astype(np.uint32) if parts else np.zeros(0, np.uint32)


@given(block_deltas())
def test_bp32_layout_matches_oracle(d):
    words = binpack.bp32_encode(d).tolist()
    pos = 0
    for m in range(0, d.size, 128):
        desc = words[pos]
        pos += 1
        for k in range(4):
            part = d[m + 32 * k:m + 32 * k + 32].tolist()
            b = max(oracle.bits(v) for v in part)
            assert (desc >> (8 * k)) & 255 == b
            assert words[pos:pos + b] == oracle.pack_bits(part, b)
            pos += b
    assert pos == len(words)
    assert np.array_equal(binpack.bp32_decode(words, d.size), d)


@given(block_deltas())
def test_simdbp128_layout_matches_oracle(d):
    words = binpack.simdbp128_encode(d).tolist()
    pos = 0
    nblocks = d.size // 128
    for first in range(0, nblocks, 16):
        head = words[pos:pos + 4]
        pos += 4
        for i in range(16):
            b = (head[i // 4] >> (8 * (i % 4))) & 255
            if first + i >= nblocks:
                assert b == 0
                continue
            part = d[128 * (first + i):128 * (first + i + 1)].tolist()
            assert b == max(oracle.bits(v) for v in part)
            assert words[pos:pos + 4 * b] == oracle.pack_vertical(part, b)
            pos += 4 * b
    assert pos == len(words)
    assert np.array_equal(binpack.simdbp128_decode(words, d.size), d)


def test_requires_block_multiple():
    with pytest.raises(ValueError):
        binpack.bp32_encode(np.zeros(100, np.uint32))
    with pytest.raises(ValueError):
        binpack.simdbp128_encode(np.zeros(129, np.uint32))


def test_all_zero_blocks_cost_only_descriptors():
    assert binpack.bp32_encode(np.zeros(256, np.uint32)).tolist() == [0, 0]
    assert binpack.simdbp128_encode(np.zeros(256, np.uint32)).tolist() == [0, 0, 0, 0]


def test_corrupt_streams():
    d = np.arange(512, dtype=np.uint32)
    w = binpack.bp32_encode(d)
    with pytest.raises(CorruptStreamError):
        binpack.bp32_decode(w[:-1], 512)
    bad = w.copy()
    bad[0] = 40
    with pytest.raises(CorruptStreamError):
        binpack.bp32_decode(bad, 512)
    w = binpack.simdbp128_encode(d)
    bad = w.copy()
    bad[3] |= 5 << 24  # width for an absent 16th block
    with pytest.raises(CorruptStreamError):
        binpack.simdbp128_decode(bad, 512)
    with pytest.raises(CorruptStreamError):
        binpack.simdbp128_decode(w[:-3], 512)
