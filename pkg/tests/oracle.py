"""Slow, obviously-correct reference implementations used as test oracles.

Everything here works on Python ints and lists so it shares no code with the
numba kernels under test.
"""
import math

M32 = 0xFFFFFFFF


def bits(x):
    return int(x).bit_length()


# bit packing -------------------------------------------------------------

def pack_bits(values, b):
    """Concatenate values as ``b``-bit fields, low bits first, into 32-bit words."""
    acc = 0
    for i, v in enumerate(values):
        assert 0 <= v < (1 << b) or b == 0 and v == 0
        acc |= int(v) << (i * b)
    nwords = (len(values) * b + 31) // 32
    return [(acc >> (32 * k)) & M32 for k in range(nwords)]


def unpack_bits(words, b, n):
    acc = 0
    for k, w in enumerate(words):
        acc |= int(w) << (32 * k)
    mask = (1 << b) - 1
    return [(acc >> (i * b)) & mask for i in range(n)]


def pack_vertical(values, b):
    """Four lanes (value i in lane i % 4), each scalar-packed, then interleaved."""
    lanes = [pack_bits(list(values[j::4]), b) for j in range(4)]
    out = []
    for k in range(b):
        out.extend(lane[k] for lane in lanes)
    return out


def unpack_vertical(words, b):
    lanes = [unpack_bits(list(words[j::4]), b, 32) for j in range(4)]
    return [lanes[i % 4][i // 4] for i in range(128)]


# differential coding ---------------------------------------------------

def deltas(values, stride=1):
    v = [int(x) for x in values]
    return [x if i < stride else x - v[i - stride] for i, x in enumerate(v)]


def prefix_sum(d, stride=1):
    out = []
    for i, x in enumerate(d):
        out.append(int(x) + (out[i - stride] if i >= stride else 0))
    return out


# byte-oriented codes -------------------------------------------------------

def vbyte(values):
    out = bytearray()
    for x in values:
        x = int(x)
        while x >= 128:
            out.append(x & 127)
            x >>= 7
        out.append(x | 128)
    return bytes(out)


def g8iu_decode(data, n):
    out = []
    pos = 0
    while len(out) < n:
        desc = data[pos]
        group = data[pos + 1:pos + 9]
        start = 0
        for j in range(8):
            if not (desc >> j) & 1:
                out.append(int.from_bytes(group[start:j + 1], "little"))
                start = j + 1
                if len(out) == n:
                    break
        pos += 9
    return out


SIMPLE8B = [(240, 0), (120, 0), (60, 1), (30, 2), (20, 3), (15, 4), (12, 5), (10, 6),
            (8, 7), (7, 8), (6, 10), (5, 12), (4, 15), (3, 20), (2, 30), (1, 60)]


def simple8b_decode(words, n):
    out = []
    for k in range(0, len(words), 2):
        word = int(words[k]) | int(words[k + 1]) << 32
        count, b = SIMPLE8B[word >> 60]
        for j in range(count):
            out.append((word >> (j * b)) & ((1 << b) - 1) if b else 0)
    assert len(out) >= n
    return out[:n]


# patched coding --------------------------------------------------------------

def fastpfor_brute(hist, block_len):
    """Exhaustive search over every width; ties prefer the larger width."""
    maxbits = max((w for w in range(33) if hist[w]), default=0)
    best = None
    for b in range(maxbits + 1):
        c = sum(hist[b + 1:])
        cost = b * block_len + (8 + maxbits - b) * c
        if best is None or cost <= best[0]:
            best = (cost, b, c)
    return best[1], best[2], maxbits


def pfor_exceptions(block, b):
    """Positions of natural and compulsory exceptions in a block at width ``b``."""
    limit = 1 << b
    natural = [i for i, v in enumerate(block) if v >= limit]
    out = []
    for p in natural:
        while out and p - out[-1] - 1 >= limit:
            out.append(out[-1] + limit)
        out.append(p)
    return out


def pfor_page_cost(page, b, block=128):
    e = sum(len(pfor_exceptions(page[s:s + block], b)) for s in range(0, len(page), block))
    return len(page) * b + 32 * e


# information theory ----------------------------------------------------------

def entropy(symbols):
    counts = {}
    for s in symbols:
        counts[s] = counts.get(s, 0) + 1
    n = len(symbols)
    return -sum(c / n * math.log2(c / n) for c in counts.values())
