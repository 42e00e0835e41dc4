import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from intzpack import bitpack, patched
from intzpack.errors import CorruptStreamError

# 16-value block: three 1-bit, ten 2-bit and three 6-bit values
EXAMPLE = [2, 2, 1, 2, 38, 2, 1, 3, 2, 32, 2, 52, 2, 3, 3, 1]
VARIANTS = sorted(patched.VARIANTS)


@st.composite
def outlier_pages(draw):
    """Blocks of small values sprinkled with a few large ones."""
    nblocks = draw(st.integers(0, 20))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    base = draw(st.integers(0, 12))
    d = rng.integers(0, 1 << base, 128 * nblocks, dtype=np.uint64)
    k = draw(st.integers(0, 40))
    if d.size and k:
        pos = rng.integers(0, d.size, k)
        d[pos] = rng.integers(0, 1 << 32, k, dtype=np.uint64) >> rng.integers(0, 32, k, dtype=np.uint64)
    return d.astype(np.uint32)


# width selection ------------------------------------------------------------

def test_example_costs_and_choice():
    h = patched.histogram33(EXAMPLE)
    assert (h[1], h[2], h[6]) == (3, 10, 3)
    assert [patched.fastpfor_cost(h, 16, b) for b in (1, 2, 6)] == [185, 68, 96]
    assert patched.choose_width_fastpfor(h, 16) == (2, 3, 6)


def test_example_block_metadata():
    meta, low, highs = patched.split_block(EXAMPLE)
    assert meta.byte_array() == [2, 6, 3, 4, 9, 11]
    assert highs.tolist() == [0b1001, 0b1000, 0b1101]
    assert np.array_equal((highs.astype(np.int64) << 2) | low[[4, 9, 11]], [38, 32, 52])
    # packed lows, one byte per metadata entry, and the highs at maxbits - b bits
    total = 16 * meta.b + 8 * len(meta.byte_array()) + meta.c * (meta.maxbits - meta.b)
    assert total / 16 == 5.75


def test_uniform_width_has_no_exceptions():
    for w in range(33):
        h = np.zeros(33, np.int64)
        h[w] = 128
        b, c, m = patched.choose_width_fastpfor(h, 128)
        assert (b, c, m) == (w, 0, w)
    meta, _, _ = patched.split_block([5] * 16)
    assert meta.byte_array() == [3, 3]


@given(st.lists(st.integers(0, 20), min_size=33, max_size=33))
def test_choose_matches_brute_force(h):
    assert patched.choose_width_fastpfor(h, sum(h)) == oracle.fastpfor_brute(h, sum(h))


# FastPFOR family ---------------------------------------------------------------

@pytest.mark.parametrize("variant", VARIANTS)
@given(d=outlier_pages())
def test_fastpfor_roundtrip(variant, d):
    w = patched.fastpfor_encode(d, variant)
    assert np.array_equal(patched.fastpfor_decode(w, d.size, variant), d)


@given(outlier_pages())
def test_variants_agree(d):
    outs = [patched.fastpfor_decode(patched.fastpfor_encode(d, v), d.size, v) for v in VARIANTS]
    assert all(np.array_equal(o, d) for o in outs)


def _page_parts(words):
    offset = int(words[0])
    nbytes = int(words[offset])
    meta = words[offset + 1:offset + 1 + (nbytes + 3) // 4].view(np.uint8)[:nbytes]
    return offset, meta.tolist(), offset + 1 + (nbytes + 3) // 4


@given(outlier_pages())
def test_fast_page_layout(d):
    if d.size == 0:
        return
    words = patched.fastpfor_encode(d, "fast")
    offset, meta, exc = _page_parts(words)
    # header points at the byte-array length word after the packed blocks
    expected_meta = []
    packed = 1
    highs_by_width = {}
    for s in range(0, d.size, 128):
        bm, low, highs = patched.split_block(d[s:s + 128])
        expected_meta += bm.byte_array()
        for k in range(4):
            part = low[32 * k:32 * k + 32].tolist()
            assert words[packed:packed + bm.b].tolist() == oracle.pack_bits(part, bm.b)
            packed += bm.b
        highs_by_width.setdefault(bm.maxbits - bm.b, []).extend(highs.tolist())
    assert offset == packed
    assert meta == expected_meta
    bitset = int(words[exc])
    assert bitset == sum(1 << (w - 1) for w in highs_by_width if w)
    p = exc + 1
    for w in range(1, 33):
        if not bitset >> (w - 1) & 1:
            continue
        vals = highs_by_width[w]
        assert words[p] == len(vals)
        p += 1
        padded = vals + [0] * (-len(vals) % 32)
        nwords = len(padded) * w // 32
        assert words[p:p + nwords].tolist() == oracle.pack_bits(padded, w)
        p += nwords
    assert p == words.size


def test_simple_variant_uses_simple8b_for_highs():
    d = np.ones(256, np.uint32)
    d[[3, 200]] = [1 << 20, 1 << 25]
    words = patched.fastpfor_encode(d, "simple")
    _, _, exc = _page_parts(words)
    assert oracle.simple8b_decode(words[exc:].tolist(), 2) == [1 << 19, 1 << 24]


def test_simdfast_alignment_and_padding():
    d = np.ones(128, np.uint32)
    d[7] = 1 << 10
    words = patched.fastpfor_encode(d, "simdfast")
    _, _, exc = _page_parts(words)
    assert words[exc] == 1 << 9  # one high of width 10
    assert words[exc + 1] == 1
    start = exc + 2 + (-(exc + 2)) % 4
    assert start % 4 == 0
    assert words.size == start + 4 * 10  # one group of 128 highs
    assert bitpack.unpack_vertical128(words[start:], 10)[0] == 1 << 9


def test_page_fixed_overhead_is_eight_bytes():
    d = np.zeros(128, np.uint32)
    words = patched.fastpfor_encode(d, "fast")
    # header, byte-array length, one word of [0, 0] metadata, empty bitset
    assert words.tolist() == [1, 2, 0, 0]


def test_fastpfor_corrupt():
    d = np.arange(1024, dtype=np.uint32) * 3
    w = patched.fastpfor_encode(d, "fast")
    bad = w.copy()
    bad[0] = w.size + 5
    with pytest.raises(CorruptStreamError):
        patched.fastpfor_decode(bad, 1024, "fast")
    bad = w.copy()
    bad[w[0]] = 4 * w.size
    with pytest.raises(CorruptStreamError):
        patched.fastpfor_decode(bad, 1024, "fast")
    with pytest.raises(CorruptStreamError):
        patched.fastpfor_decode(w[:-1], 1024, "fast")
    with pytest.raises(ValueError):
        patched.fastpfor_encode(np.zeros(100, np.uint32))


# PFOR ------------------------------------------------------------------------------

def _pfor_slots(words, b, block=0):
    q = 1 + block * (1 + 4 * b)
    slots = []
    for k in range(4):
        slots += oracle.unpack_bits(words[q + 1 + b * k:q + 1 + b * (k + 1)].tolist(), b, 32)
    return int(words[q]), slots


def test_pfor_linked_exceptions_example():
    d = np.array(EXAMPLE + [1] * 112, np.uint32)
    words = patched.pfor_encode(d, 3)
    assert words[0] == 3
    marker, slots = _pfor_slots(words, 3)
    assert marker & 0xFFFF == 4 and marker >> 16 == 0
    assert slots[:16] == [2, 2, 1, 2, 4, 2, 1, 3, 2, 1, 2, 0, 2, 3, 3, 1]
    assert words[-4:].tolist() == [3, 38, 32, 52]
    assert np.array_equal(patched.pfor_decode(words, 128), d)


def test_pfor_compulsory_exception():
    d = np.zeros(128, np.uint32)
    d[[0, 3]] = 2  # gap of two slots cannot be expressed in one bit
    words = patched.pfor_encode(d, 1)
    marker, slots = _pfor_slots(words, 1)
    assert oracle.pfor_exceptions(d.tolist(), 1) == [0, 2, 3]
    assert marker & 0xFFFF == 0
    assert slots[:4] == [1, 0, 0, 0]
    assert words[-4:].tolist() == [3, 2, 0, 2]
    assert np.array_equal(patched.pfor_decode(words, 128), d)


def test_pfor_block_without_exceptions():
    d = np.ones(256, np.uint32)
    d[200] = 99
    words = patched.pfor_encode(d, 1)
    m0, _ = _pfor_slots(words, 1, 0)
    m1, _ = _pfor_slots(words, 1, 1)
    assert (m0 & 0xFFFF, m0 >> 16) == (128, 0)
    assert (m1 & 0xFFFF, m1 >> 16) == (72, 0)


@given(outlier_pages())
def test_pfor_choice_matches_exhaustive_search(d):
    if d.size == 0:
        return
    page = d.tolist()
    best = min(range(32, 0, -1), key=lambda b: oracle.pfor_page_cost(page, b))
    assert patched.pfor_choose_width(d) == best


@given(outlier_pages(), st.integers(1, 32))
def test_pfor_roundtrip_any_width(d, b):
    w = patched.pfor_encode(d, b)
    assert np.array_equal(patched.pfor_decode(w, d.size), d)


def test_pfor_choose_small_values():
    assert patched.pfor_choose_width(np.full(128, 7, np.uint32)) == 3
    assert patched.pfor_choose_width([]) == 1


def test_pfor_corrupt():
    d = np.arange(256, dtype=np.uint32)
    w = patched.pfor_encode(d, 4)
    bad = w.copy()
    bad[1] = 200  # first-exception position out of range
    with pytest.raises(CorruptStreamError):
        patched.pfor_decode(bad, 256)
    with pytest.raises(CorruptStreamError):
        patched.pfor_decode(w[:-1], 256)
    with pytest.raises(ValueError):
        patched.pfor_encode(np.zeros(1 << 17, np.uint32))
