"""Variable Byte, varint-G8IU and Simple-8b.

The byte-oriented formats are exposed both as byte strings and, for use
inside chunk payloads, as little-endian 32-bit words with the byte stream
zero-padded to a multiple of four bytes.
"""
import numpy as np
from numba import njit

from .errors import CorruptStreamError

# Simple-8b selector table: (integers per word, bits per integer)
SIMPLE8B_SELECTORS = (
    (240, 0), (120, 0), (60, 1), (30, 2), (20, 3), (15, 4), (12, 5), (10, 6),
    (8, 7), (7, 8), (6, 10), (5, 12), (4, 15), (3, 20), (2, 30), (1, 60),
)
_S8B_COUNT = np.array([c for c, _ in SIMPLE8B_SELECTORS], dtype=np.int64)
_S8B_BITS = np.array([b for _, b in SIMPLE8B_SELECTORS], dtype=np.int64)

_TRUNCATED = -1
_TOO_LONG = -2
_OVERFLOW = -3

_MESSAGES = {
    _TRUNCATED: "stream ends before all integers were decoded",
    _TOO_LONG: "integer code longer than the format allows",
    _OVERFLOW: "decoded integer exceeds 32 bits",
}


def _raise_on(code, what):
    if code < 0:
        raise CorruptStreamError(f"{what}: {_MESSAGES[code]}")


def _as_u32(values):
    arr = np.asarray(values)
    if arr.size and arr.dtype.kind not in "ui":
        raise TypeError("values must be integers")
    if arr.size and (arr.min() < 0 or int(arr.max()) > 0xFFFFFFFF):
        raise ValueError("values must be unsigned 32-bit integers")
    return np.ascontiguousarray(arr, dtype=np.uint32)


def _bytes_to_words(buf):
    pad = (-buf.size) % 4
    if pad:
        buf = np.concatenate((buf, np.zeros(pad, dtype=np.uint8)))
    return buf.view("<u4").astype(np.uint32, copy=False)


def _word_bytes(words):
    return np.ascontiguousarray(words, dtype="<u4").view(np.uint8)


# --------------------------------------------------------------------------
# Variable Byte

@njit(cache=True)
def _vbyte_encode(src):
    out = np.empty(5 * src.size, dtype=np.uint8)
    p = 0
    for i in range(src.size):
        x = np.int64(src[i])
        while x >= 128:
            out[p] = x & 127
            x >>= 7
            p += 1
        out[p] = x | 128
        p += 1
    return out[:p]


@njit(cache=True)
def _vbyte_decode(buf, pos, n, out, op):
    end = buf.size
    for i in range(n):
        if pos >= end:
            return _TRUNCATED
        c = np.int64(buf[pos])
        pos += 1
        if c & 128:
            # single-byte code, the common case for small deltas
            out[op + i] = c & 127
            continue
        x = c
        shift = 7
        while True:
            if pos >= end:
                return _TRUNCATED
            c = np.int64(buf[pos])
            pos += 1
            x |= (c & 127) << shift
            if c & 128:
                break
            shift += 7
            if shift > 28:
                return _TOO_LONG
        if x > 0xFFFFFFFF:
            return _OVERFLOW
        out[op + i] = x
    return pos


def vbyte_encode(deltas):
    """Each integer as 7-bit groups, least significant first; the last byte has its high bit set."""
    return _vbyte_encode(_as_u32(deltas)).tobytes()


def vbyte_decode(data, n):
    buf = np.frombuffer(bytes(data), dtype=np.uint8)
    out = np.empty(n, dtype=np.uint32)
    _raise_on(_vbyte_decode(buf, 0, n, out, 0), "vbyte")
    return out


def vbyte_encode_words(deltas):
    return _bytes_to_words(_vbyte_encode(deltas))


def vbyte_decode_words(words, pos, n, out):
    """Decode ``n`` integers starting at word ``pos``; returns the next word position."""
    buf = _word_bytes(words)
    end = _vbyte_decode(buf, 4 * pos, n, out, 0)
    _raise_on(end, "vbyte")
    return (end + 3) // 4


# --------------------------------------------------------------------------
# varint-G8IU

@njit(cache=True)
def _nbytes(x):
    if x < 256:
        return 1
    if x < 65536:
        return 2
    if x < 16777216:
        return 3
    return 4


@njit(cache=True)
def _g8iu_encode(src):
    n = src.size
    # worst case: two 4-byte integers per 9-byte group
    out = np.zeros(9 * ((n + 1) // 2) + 9, dtype=np.uint8)
    p = 0
    i = 0
    while i < n:
        desc = 0xFF
        used = 0
        while i < n:
            x = np.int64(src[i])
            k = _nbytes(x)
            if used + k > 8:
                break
            for j in range(k):
                out[p + 1 + used + j] = (x >> (8 * j)) & 255
            used += k
            desc &= ~(1 << (used - 1))
            i += 1
        out[p] = desc & 0xFF
        p += 9
    return out[:p]


@njit(cache=True)
def _g8iu_decode(buf, pos, n, out, op):
    end = buf.size
    i = 0
    while i < n:
        if pos + 9 > end:
            return _TRUNCATED
        desc = np.int64(buf[pos])
        x = np.int64(0)
        k = 0
        for j in range(8):
            x |= np.int64(buf[pos + 1 + j]) << (8 * k)
            k += 1
            if (desc >> j) & 1 == 0:
                if k > 4:
                    return _TOO_LONG
                out[op + i] = x
                i += 1
                x = 0
                k = 0
                if i == n:
                    break
        pos += 9
    return pos


def g8iu_encode(deltas):
    """Groups of one descriptor byte plus eight data bytes.

    Descriptor bit ``i`` is 0 exactly when data byte ``i`` ends an integer;
    integers use 1 to 4 little-endian bytes and never cross a group.
    """
    return _g8iu_encode(_as_u32(deltas)).tobytes()


def g8iu_decode(data, n):
    buf = np.frombuffer(bytes(data), dtype=np.uint8)
    out = np.empty(n, dtype=np.uint32)
    _raise_on(_g8iu_decode(buf, 0, n, out, 0), "varint-G8IU")
    return out


def g8iu_encode_words(deltas):
    return _bytes_to_words(_g8iu_encode(deltas))


def g8iu_decode_words(words, pos, n, out):
    buf = _word_bytes(words)
    end = _g8iu_decode(buf, 4 * pos, n, out, 0)
    _raise_on(end, "varint-G8IU")
    return (end + 3) // 4


# --------------------------------------------------------------------------
# Simple-8b

@njit(cache=True)
def _s8b_encode(src, counts, widths):
    n = src.size
    out = np.empty(2 * n + 2, dtype=np.uint32)
    p = 0
    i = 0
    while i < n:
        zeros = 0
        while zeros < 240 and i + zeros < n and src[i + zeros] == 0:
            zeros += 1
        if zeros == 240:
            sel = 0
            cnt = 240
        elif zeros >= 120:
            sel = 1
            cnt = 120
        else:
            sel = 2
            cnt = 0
            while sel < 16:
                cnt = min(counts[sel], n - i)
                limit = np.int64(1) << widths[sel]
                ok = True
                for j in range(cnt):
                    if np.int64(src[i + j]) >= limit:
                        ok = False
                        break
                if ok:
                    break
                sel += 1
        data = np.int64(0)
        if sel >= 2:
            b = widths[sel]
            for j in range(cnt):
                data |= np.int64(src[i + j]) << (j * b)
        out[p] = data & 0xFFFFFFFF
        out[p + 1] = (data >> 32) | (sel << 28)
        p += 2
        i += cnt
    return out[:p]


@njit(inline="always")
def _s8b_unpack(w, out, o, count, b):
    mask = (np.uint64(1) << np.uint64(b)) - np.uint64(1)
    for j in range(count):
        out[o + j] = (w >> np.uint64(b * j)) & mask


@njit(cache=True)
def _s8b_decode(words, pos, n, out, op, counts, widths):
    # literal widths let each branch unroll; a partial last word takes the slow path
    end = words.size
    o = op
    stop = op + n
    while o < stop:
        if pos + 2 > end:
            return _TRUNCATED
        w = (np.uint64(words[pos + 1]) << np.uint64(32)) | np.uint64(words[pos])
        pos += 2
        sel = np.int64(w >> np.uint64(60))
        cnt = counts[sel]
        if o + cnt > stop:
            cnt = stop - o
            b = np.uint64(widths[sel])
            mask = (np.uint64(1) << b) - np.uint64(1)
            for j in range(cnt):
                out[o + j] = w & mask
                w >>= b
        elif sel < 2:
            out[o:o + cnt] = 0
        elif sel == 2:
            _s8b_unpack(w, out, o, 60, 1)
        elif sel == 3:
            _s8b_unpack(w, out, o, 30, 2)
        elif sel == 4:
            _s8b_unpack(w, out, o, 20, 3)
        elif sel == 5:
            _s8b_unpack(w, out, o, 15, 4)
        elif sel == 6:
            _s8b_unpack(w, out, o, 12, 5)
        elif sel == 7:
            _s8b_unpack(w, out, o, 10, 6)
        elif sel == 8:
            _s8b_unpack(w, out, o, 8, 7)
        elif sel == 9:
            _s8b_unpack(w, out, o, 7, 8)
        elif sel == 10:
            _s8b_unpack(w, out, o, 6, 10)
        elif sel == 11:
            _s8b_unpack(w, out, o, 5, 12)
        elif sel == 12:
            _s8b_unpack(w, out, o, 4, 15)
        elif sel == 13:
            _s8b_unpack(w, out, o, 3, 20)
        elif sel == 14:
            _s8b_unpack(w, out, o, 2, 30)
        else:
            _s8b_unpack(w, out, o, 1, 60)
        o += cnt
    return pos


def simple8b_encode(values):
    """Greedy Simple-8b; each 64-bit word is returned as (low, high) 32-bit words.

    The selector sits in the top four bits of the high word and data fills the
    remaining 60 bits, low bits first.
    """
    arr = np.asarray(values)
    if arr.size and arr.dtype.kind not in "ui":
        raise TypeError("values must be integers")
    arr = np.ascontiguousarray(arr, dtype=np.uint64)
    if arr.size and int(arr.max()) >> 60:
        raise ValueError("Simple-8b cannot code values >= 2**60")
    return _s8b_encode(arr.view(np.int64), _S8B_COUNT, _S8B_BITS)


def simple8b_decode(words, n):
    w = np.ascontiguousarray(words, dtype=np.uint32)
    out = np.empty(n, dtype=np.int64)
    _raise_on(_s8b_decode(w, 0, n, out, 0, _S8B_COUNT, _S8B_BITS), "Simple-8b")
    return out.view(np.uint64)


def simple8b_encode_words(deltas):
    return _s8b_encode(deltas, _S8B_COUNT, _S8B_BITS)


def simple8b_decode_words(words, pos, n, out):
    end = _s8b_decode(words, pos, n, out, 0, _S8B_COUNT, _S8B_BITS)
    _raise_on(end, "Simple-8b")
    return end
