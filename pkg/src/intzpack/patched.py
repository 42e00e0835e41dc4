"""Patched frame-of-reference codecs.

PFOR picks one bit width per page and threads exceptions through the packed
block as a linked list of offsets, inserting compulsory exceptions when an
offset does not fit. Exception values are kept verbatim in a per-page table.

SimplePFOR, FastPFOR and SIMD-FastPFOR pick a width per 128-integer block
with a cost model, keep per-block metadata in a byte array and store only
the high bits of exceptions, compressed once per page:

    word 0                 offset (in words) of the byte-array length word
    packed blocks          low b bits of every value, 4*b words per block
    byte-array length      in bytes, before padding
    byte array             per block: b, maxbits[, c, c positions]; zero-padded
    exception section      Simple: one Simple-8b stream of all high parts
                           Fast/SimdFast: bitset of used widths, then for each
                           width a count word and the bit-packed high parts
"""
from dataclasses import dataclass

import numpy as np
from numba import njit

from .basic import _S8B_BITS, _S8B_COUNT, _s8b_decode, _s8b_encode
from .bitpack import bits32, pack_run, pack_vertical, unpack_run, unpack_vertical
from .errors import CorruptStreamError

SIMPLE = 0
FAST = 1
SIMDFAST = 2
VARIANTS = {"simple": SIMPLE, "fast": FAST, "simdfast": SIMDFAST}

BLOCK = 128

_TRUNCATED = -1
_BAD_OFFSET = -2
_BYTE_OVERRUN = -3
_EXC_UNDERFLOW = -4
_BAD_WIDTH = -5
_BAD_MARKER = -6

_MESSAGES = {
    _TRUNCATED: "payload truncated",
    _BAD_OFFSET: "malformed byte-array offset",
    _BYTE_OVERRUN: "byte array overrun",
    _EXC_UNDERFLOW: "exception data exhausted",
    _BAD_WIDTH: "invalid bit width",
    _BAD_MARKER: "block marker out of range",
}


def _finish(code, name):
    if code < 0:
        raise CorruptStreamError(f"{name}: {_MESSAGES.get(code, 'corrupt input')}")
    return code


# --------------------------------------------------------------------------
# width selection

@njit(cache=True)
def _histogram(src, start, count, hist):
    for k in range(33):
        hist[k] = 0
    for i in range(start, start + count):
        hist[bits32(src[i])] += 1


@njit(cache=True)
def _choose(hist, block_len):
    maxbits = 32
    while maxbits > 0 and hist[maxbits] == 0:
        maxbits -= 1
    best_b = maxbits
    best_cost = maxbits * block_len
    best_c = 0
    c = 0
    for b in range(maxbits - 1, -1, -1):
        c += hist[b + 1]
        cost = b * block_len + (8 + maxbits - b) * c
        if cost < best_cost:
            best_cost = cost
            best_b = b
            best_c = c
    return best_b, best_c, maxbits


def histogram33(values):
    """Counts of values by bit length, index 0..32."""
    arr = np.ascontiguousarray(values, dtype=np.uint32)
    hist = np.zeros(33, dtype=np.int64)
    _histogram(arr, 0, arr.size, hist)
    return hist


def fastpfor_cost(hist, block_len, b):
    """Estimated bits for a block at width ``b``: packed data plus exceptions."""
    h = np.asarray(hist, dtype=np.int64)
    nz = np.flatnonzero(h)
    maxbits = int(nz[-1]) if nz.size else 0
    c = int(h[b + 1:].sum())
    return b * block_len + (8 + maxbits - b) * c


def choose_width_fastpfor(hist, block_len):
    """Width ``b`` minimising ``b*block_len + (8 + maxbits - b) * c(b)``.

    ``c(b)`` is the number of values longer than ``b`` bits. Ties go to the
    larger width. Returns ``(b, c, maxbits)``.
    """
    h = np.asarray(hist, dtype=np.int64)
    if h.shape != (33,):
        raise ValueError("histogram must have 33 entries")
    b, c, m = _choose(h, int(block_len))
    return int(b), int(c), int(m)


@dataclass(frozen=True)
class BlockMeta:
    b: int
    maxbits: int
    c: int
    positions: tuple

    def byte_array(self):
        head = [self.b, self.maxbits]
        if self.maxbits > self.b:
            head += [self.c, *self.positions]
        return head


def split_block(block):
    """Metadata, truncated low parts and exception high parts for one block.

    Works for any block length up to 255; the codecs use 128.
    """
    arr = np.ascontiguousarray(block, dtype=np.uint32)
    if arr.size > 255:
        raise ValueError("positions must fit in one byte")
    b, c, maxbits = choose_width_fastpfor(histogram33(arr), arr.size)
    wide = arr.astype(np.int64)
    lengths = np.array([int(x).bit_length() for x in wide], dtype=np.int64)
    positions = tuple(int(p) for p in np.flatnonzero(lengths > b))
    low = (wide & ((1 << b) - 1)).astype(np.uint32)
    highs = (wide[list(positions)] >> b).astype(np.uint32)
    return BlockMeta(b, maxbits, c, positions), low, highs


# --------------------------------------------------------------------------
# FastPFOR family

@njit(cache=True)
def _fast_encode(src, variant, s8b_counts, s8b_widths):
    n = src.size
    nblocks = n // BLOCK
    hist = np.zeros(33, dtype=np.int64)
    meta = np.empty(nblocks * (3 + BLOCK), dtype=np.uint8)
    mp = 0
    exc_val = np.empty(n, dtype=np.uint32)
    exc_width = np.empty(n, dtype=np.int64)
    ne = 0
    out = np.zeros(2 * n + 64 * 132 + 16, dtype=np.uint32)
    p = 1
    for blk in range(nblocks):
        start = blk * BLOCK
        _histogram(src, start, BLOCK, hist)
        b, c, maxbits = _choose(hist, BLOCK)
        meta[mp] = b
        meta[mp + 1] = maxbits
        mp += 2
        if maxbits > b:
            meta[mp] = c
            mp += 1
            for j in range(BLOCK):
                v = np.int64(src[start + j])
                if v >> b:
                    meta[mp] = j
                    mp += 1
                    exc_val[ne] = v >> b
                    exc_width[ne] = maxbits - b
                    ne += 1
        if variant == SIMDFAST:
            pack_vertical(src, start, out, p, b)
        else:
            pack_run(src, start, out, p, b, 4)
        p += 4 * b
    out[0] = p
    out[p] = mp
    p += 1
    for k in range(0, mp, 4):
        w = 0
        for j in range(min(4, mp - k)):
            w |= np.int64(meta[k + j]) << (8 * j)
        out[p] = w
        p += 1
    if variant == SIMPLE:
        words = _s8b_encode(exc_val[:ne], s8b_counts, s8b_widths)
        if p + words.size > out.size:
            grown = np.zeros(p + words.size, dtype=np.uint32)
            grown[:p] = out[:p]
            out = grown
        out[p:p + words.size] = words
        p += words.size
        return out[:p]
    group = 128 if variant == SIMDFAST else 32
    bitset = 0
    for k in range(ne):
        bitset |= np.int64(1) << (exc_width[k] - 1)
    out[p] = bitset
    p += 1
    stage = np.zeros(ne + group, dtype=np.uint32)
    for width in range(1, 33):
        if not (bitset >> (width - 1)) & 1:
            continue
        cnt = 0
        for k in range(ne):
            if exc_width[k] == width:
                stage[cnt] = exc_val[k]
                cnt += 1
        padded = (cnt + group - 1) // group * group
        for k in range(cnt, padded):
            stage[k] = 0
        out[p] = cnt
        p += 1
        if variant == SIMDFAST:
            while p % 4:
                out[p] = 0
                p += 1
            for g in range(0, padded, 128):
                pack_vertical(stage, g, out, p, width)
                p += 4 * width
        else:
            pack_run(stage, 0, out, p, width, padded // 32)
            p += padded // 32 * width
    return out[:p]


@njit(cache=True)
def _fast_decode(words, pos, n, out, op, variant, s8b_counts, s8b_widths):
    end = words.size
    nblocks = n // BLOCK
    if nblocks == 0:
        return pos
    if pos >= end:
        return _TRUNCATED
    base = pos
    offset = np.int64(words[pos])
    lenpos = base + offset
    if offset < 1 or lenpos >= end:
        return _BAD_OFFSET
    nbytes = np.int64(words[lenpos])
    meta_start = lenpos + 1
    exc_start = meta_start + (nbytes + 3) // 4
    if exc_start > end:
        return _TRUNCATED
    meta = words[meta_start:exc_start].view(np.uint8)

    # pass over the byte array: total exceptions and packed size
    total = 0
    packed = 0
    mp = 0
    for blk in range(nblocks):
        if mp + 2 > nbytes:
            return _BYTE_OVERRUN
        b = np.int64(meta[mp])
        maxbits = np.int64(meta[mp + 1])
        mp += 2
        if b > 32 or maxbits > 32 or b > maxbits:
            return _BAD_WIDTH
        packed += 4 * b
        if maxbits > b:
            if mp + 1 > nbytes:
                return _BYTE_OVERRUN
            c = np.int64(meta[mp])
            mp += 1 + c
            if mp > nbytes:
                return _BYTE_OVERRUN
            total += c
    if packed != offset - 1:
        return _BAD_OFFSET

    # bulk-decode the exception high parts
    p = exc_start
    if variant == SIMPLE:
        highs = np.empty(total, dtype=np.uint32)
        p = _s8b_decode(words, p, total, highs, 0, s8b_counts, s8b_widths)
        if p < 0:
            return p
        starts = np.zeros(34, dtype=np.int64)
        counts = np.zeros(34, dtype=np.int64)
    else:
        group = 128 if variant == SIMDFAST else 32
        highs = np.empty(total + 32 * group, dtype=np.uint32)
        starts = np.zeros(34, dtype=np.int64)
        counts = np.zeros(34, dtype=np.int64)
        if p >= end:
            return _TRUNCATED
        bitset = np.int64(words[p])
        p += 1
        h = 0
        for width in range(1, 33):
            if not (bitset >> (width - 1)) & 1:
                continue
            if p >= end:
                return _TRUNCATED
            cnt = np.int64(words[p])
            p += 1
            padded = (cnt + group - 1) // group * group
            if h + padded > highs.size:
                return _EXC_UNDERFLOW
            if variant == SIMDFAST:
                p += (4 - (p - base) % 4) % 4
            if p + padded * width // 32 > end:
                return _TRUNCATED
            starts[width] = h
            counts[width] = cnt
            if variant == SIMDFAST:
                for g in range(0, padded, 128):
                    unpack_vertical(words, p, highs, h + g, width)
                    p += 4 * width
            else:
                unpack_run(words, p, highs, h, width, padded // 32)
                p += padded // 32 * width
            h += padded

    # unpack blocks and patch
    used = np.zeros(34, dtype=np.int64)
    seq = 0
    q = base + 1
    mp = 0
    for blk in range(nblocks):
        o = op + blk * BLOCK
        b = np.int64(meta[mp])
        maxbits = np.int64(meta[mp + 1])
        mp += 2
        if variant == SIMDFAST:
            unpack_vertical(words, q, out, o, b)
        else:
            unpack_run(words, q, out, o, b, 4)
        q += 4 * b
        if maxbits > b:
            c = np.int64(meta[mp])
            mp += 1
            width = maxbits - b
            for j in range(c):
                at = np.int64(meta[mp + j])
                if at >= BLOCK:
                    return _BAD_MARKER
                if variant == SIMPLE:
                    hi = np.int64(highs[seq])
                    seq += 1
                else:
                    if used[width] >= counts[width]:
                        return _EXC_UNDERFLOW
                    hi = np.int64(highs[starts[width] + used[width]])
                    used[width] += 1
                out[o + at] = np.int64(out[o + at]) | (hi << b)
            mp += c
    return p


def _variant(variant):
    if isinstance(variant, str):
        try:
            return VARIANTS[variant.lower()]
        except KeyError:
            raise ValueError(f"unknown FastPFOR variant {variant!r}") from None
    if variant not in (SIMPLE, FAST, SIMDFAST):
        raise ValueError(f"unknown FastPFOR variant {variant!r}")
    return variant


def _multiple_of_block(deltas):
    arr = np.ascontiguousarray(deltas, dtype=np.uint32)
    if arr.size % BLOCK:
        raise ValueError(f"input length must be a multiple of {BLOCK}, got {arr.size}")
    return arr


def fastpfor_encode(deltas, variant="fast"):
    """Encode one page (a multiple of 128 integers)."""
    arr = _multiple_of_block(deltas)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint32)
    return _fast_encode(arr, _variant(variant), _S8B_COUNT, _S8B_BITS)


def fastpfor_decode_words(words, pos, n, out, variant="fast"):
    if n % BLOCK:
        raise ValueError(f"page length must be a multiple of {BLOCK}")
    v = _variant(variant)
    end = _fast_decode(words, pos, n, out, 0, v, _S8B_COUNT, _S8B_BITS)
    return _finish(end, ("SimplePFOR", "FastPFOR", "SIMD-FastPFOR")[v])


def fastpfor_decode(words, n, variant="fast"):
    out = np.empty(n, dtype=np.uint32)
    fastpfor_decode_words(np.ascontiguousarray(words, dtype=np.uint32), 0, n, out, variant)
    return out


# --------------------------------------------------------------------------
# PFOR

@njit(cache=True)
def _pfor_exceptions(src, start, count, b, flags):
    """Mark exceptions (natural and compulsory) of one block; returns their number."""
    limit = np.int64(1) << b if b < 32 else np.int64(1) << 32
    last = -1
    e = 0
    for j in range(count):
        flags[j] = 0
        if np.int64(src[start + j]) >= limit:
            if last >= 0:
                while j - last - 1 >= limit:
                    last += limit
                    flags[last] = 1
                    e += 1
            flags[j] = 1
            last = j
            e += 1
    return e


@njit(cache=True)
def _pfor_cost(src, b):
    n = src.size
    flags = np.zeros(BLOCK, dtype=np.uint8)
    e = 0
    for start in range(0, n, BLOCK):
        e += _pfor_exceptions(src, start, min(BLOCK, n - start), b, flags)
    return np.int64(n) * b + 32 * e


@njit(cache=True)
def _pfor_choose(src):
    acc = 0
    for i in range(src.size):
        acc |= src[i]
    top = max(1, bits32(acc))
    best_b = top
    best = _pfor_cost(src, top)
    for b in range(top - 1, 0, -1):
        cost = _pfor_cost(src, b)
        if cost < best:
            best = cost
            best_b = b
    return best_b


def pfor_choose_width(sample):
    """Page bit width in 1..32 minimising ``n*b + 32*exceptions``.

    Exceptions include the compulsory ones the linked list needs. At most the
    first 2**16 values are examined; ties go to the larger width.
    """
    arr = np.ascontiguousarray(sample, dtype=np.uint32)[: 1 << 16]
    if arr.size == 0:
        return 1
    return int(_pfor_choose(arr))


@njit(cache=True)
def _pfor_encode(src, b):
    n = src.size
    nblocks = n // BLOCK
    out = np.empty(1 + nblocks * (1 + 4 * b), dtype=np.uint32)
    table = np.empty(n + 1, dtype=np.uint32)
    ne = 0
    flags = np.zeros(BLOCK, dtype=np.uint8)
    slots = np.empty(BLOCK, dtype=np.uint32)
    out[0] = b
    p = 1
    for blk in range(nblocks):
        start = blk * BLOCK
        _pfor_exceptions(src, start, BLOCK, b, flags)
        first = BLOCK
        prev = -1
        for j in range(BLOCK):
            slots[j] = src[start + j]
            if flags[j]:
                if prev < 0:
                    first = j
                else:
                    slots[prev] = j - prev - 1
                prev = j
        if prev >= 0:
            slots[prev] = 0
        out[p] = first | (ne << 16)
        p += 1
        for j in range(BLOCK):
            if flags[j]:
                table[ne] = src[start + j]
                ne += 1
        pack_run(slots, 0, out, p, b, 4)
        p += 4 * b
    res = np.empty(p + 1 + ne, dtype=np.uint32)
    res[:p] = out[:p]
    res[p] = ne
    res[p + 1:] = table[:ne]
    return res


@njit(cache=True)
def _pfor_decode(words, pos, n, out, op):
    end = words.size
    nblocks = n // BLOCK
    if nblocks == 0:
        return pos
    if pos >= end:
        return _TRUNCATED
    b = np.int64(words[pos])
    if b < 1 or b > 32:
        return _BAD_WIDTH
    blocks = pos + 1
    tpos = blocks + nblocks * (1 + 4 * b)
    if tpos >= end:
        return _TRUNCATED
    total = np.int64(words[tpos])
    table = tpos + 1
    if table + total > end:
        return _TRUNCATED
    for blk in range(nblocks):
        q = blocks + blk * (1 + 4 * b)
        marker = np.int64(words[q])
        first = marker & 0xFFFF
        idx = marker >> 16
        if blk + 1 < nblocks:
            nxt = np.int64(words[q + 1 + 4 * b]) >> 16
        else:
            nxt = total
        count = nxt - idx
        if first > BLOCK or count < 0 or nxt > total:
            return _BAD_MARKER
        if (first == BLOCK) != (count == 0):
            return _BAD_MARKER
        o = op + blk * BLOCK
        unpack_run(words, q + 1, out, o, b, 4)
        at = first
        for t in range(count):
            if at >= BLOCK:
                return _BAD_MARKER
            step = np.int64(out[o + at])
            out[o + at] = words[table + idx + t]
            at += step + 1
    return table + total


def pfor_encode(deltas, b=None):
    """Encode one page (a multiple of 128 integers) with a single bit width."""
    arr = _multiple_of_block(deltas)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint32)
    if arr.size > 1 << 16:
        raise ValueError("a PFOR page holds at most 2**16 integers")
    if b is None:
        b = pfor_choose_width(arr)
    if not 1 <= b <= 32:
        raise ValueError("PFOR bit width must be in [1, 32]")
    return _pfor_encode(arr, b)


def pfor_decode_words(words, pos, n, out):
    if n % BLOCK:
        raise ValueError(f"page length must be a multiple of {BLOCK}")
    return _finish(_pfor_decode(words, pos, n, out, 0), "PFOR")


def pfor_decode(words, n):
    out = np.empty(n, dtype=np.uint32)
    pfor_decode_words(np.ascontiguousarray(words, dtype=np.uint32), 0, n, out)
    return out
