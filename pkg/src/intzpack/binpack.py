"""Binary packing codecs: BP32 and SIMD-BP128.

BP32 groups four 32-integer blocks into a meta-block headed by one word whose
byte ``i`` is the bit width of block ``i``. SIMD-BP128 groups up to sixteen
128-integer blocks (vertical layout) behind a 16-byte descriptor; widths of
missing trailing blocks are zero.
"""
import numpy as np
from numba import njit

from .bitpack import max_bits_of, pack_group, pack_vertical, unpack_group, unpack_vertical
from .errors import CorruptStreamError

_TRUNCATED = -1
_BAD_WIDTH = -2


@njit(cache=True)
def _bp32_encode(src):
    n = src.size
    out = np.empty(n + n // 128 + 1, dtype=np.uint32)
    p = 0
    for m in range(0, n, 128):
        head = p
        p += 1
        desc = 0
        for k in range(4):
            b = max_bits_of(src, m + 32 * k, 32)
            desc |= b << (8 * k)
            pack_group(src, m + 32 * k, 1, out, p, 1, b)
            p += b
        out[head] = desc
    return out[:p]


@njit(cache=True)
def _bp32_decode(words, pos, n, out, op):
    end = words.size
    for m in range(0, n, 128):
        if pos >= end:
            return _TRUNCATED
        desc = np.int64(words[pos])
        pos += 1
        need = 0
        for k in range(4):
            b = (desc >> (8 * k)) & 255
            if b > 32:
                return _BAD_WIDTH
            need += b
        if pos + need > end:
            return _TRUNCATED
        for k in range(4):
            b = (desc >> (8 * k)) & 255
            unpack_group(words, pos, 1, out, op + m + 32 * k, 1, b)
            pos += b
    return pos


@njit(cache=True)
def _bp128_encode(src):
    n = src.size
    nblocks = n // 128
    out = np.empty(n + 4 * ((nblocks + 15) // 16), dtype=np.uint32)
    p = 0
    for first in range(0, nblocks, 16):
        head = p
        p += 4
        for k in range(4):
            out[head + k] = 0
        for blk in range(first, min(first + 16, nblocks)):
            b = max_bits_of(src, 128 * blk, 128)
            i = blk - first
            out[head + i // 4] |= b << (8 * (i % 4))
            pack_vertical(src, 128 * blk, out, p, b)
            p += 4 * b
    return out[:p]


@njit(cache=True)
def _bp128_decode(words, pos, n, out, op):
    end = words.size
    nblocks = n // 128
    for first in range(0, nblocks, 16):
        if pos + 4 > end:
            return _TRUNCATED
        head = pos
        pos += 4
        count = min(16, nblocks - first)
        need = 0
        for i in range(16):
            b = (np.int64(words[head + i // 4]) >> (8 * (i % 4))) & 255
            if b > 32 or (i >= count and b != 0):
                return _BAD_WIDTH
            need += 4 * b
        if pos + need > end:
            return _TRUNCATED
        for i in range(count):
            b = (np.int64(words[head + i // 4]) >> (8 * (i % 4))) & 255
            unpack_vertical(words, pos, out, op + 128 * (first + i), b)
            pos += 4 * b
    return pos


def _check_input(deltas):
    arr = np.ascontiguousarray(deltas, dtype=np.uint32)
    if arr.size % 128:
        raise ValueError(f"input length must be a multiple of 128, got {arr.size}")
    return arr


def _finish(code, name):
    if code == _TRUNCATED:
        raise CorruptStreamError(f"{name}: payload truncated")
    if code == _BAD_WIDTH:
        raise CorruptStreamError(f"{name}: invalid bit width in descriptor")
    return code


def bp32_encode(deltas):
    return _bp32_encode(_check_input(deltas))


def bp32_decode(words, n):
    out = np.empty(n, dtype=np.uint32)
    bp32_decode_words(np.ascontiguousarray(words, dtype=np.uint32), 0, n, out)
    return out


def bp32_decode_words(words, pos, n, out):
    if n % 128:
        raise ValueError("BP32 decodes multiples of 128 integers")
    return _finish(_bp32_decode(words, pos, n, out, 0), "BP32")


def simdbp128_encode(deltas):
    return _bp128_encode(_check_input(deltas))


def simdbp128_decode(words, n):
    out = np.empty(n, dtype=np.uint32)
    simdbp128_decode_words(np.ascontiguousarray(words, dtype=np.uint32), 0, n, out)
    return out


def simdbp128_decode_words(words, pos, n, out):
    if n % 128:
        raise ValueError("SIMD-BP128 decodes multiples of 128 integers")
    return _finish(_bp128_decode(words, pos, n, out, 0), "SIMD-BP128")
