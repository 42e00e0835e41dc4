"""Codec registry, chunked encode/decode pipeline and the container format.

An array is cut into chunks of at most 2**16 integers. Each chunk is delta
coded on its own (its first delta is its first value), the largest prefix
that is a multiple of the codec's block size goes through the codec, and the
leftover deltas are appended in Variable Byte. Decoding is two passes per
chunk: deltas into a 32-bit buffer, then an in-place prefix sum.

Container layout (all integers little-endian)::

    8 bytes   magic "INTZPK01"
    u32       codec name length, then the ASCII name
    u32       number of arrays
    per array: u32 original length, u32 payload word count, payload words

An array payload is its chunk payloads back to back.
"""
import io
import struct
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import basic, binpack, delta, patched
from .errors import ContainerError, CorruptStreamError

CHUNK_SIZE = 1 << 16
MAGIC = b"INTZPK01"
RAW = "RAW"
NO_DELTA = "none"


@dataclass(frozen=True)
class Codec:
    name: str
    block_multiple: int
    delta_mode: str
    encode_core: Callable
    decode_core: Callable
    label: str = ""

    def __repr__(self):
        return f"Codec({self.name!r})"


@dataclass
class Chunk:
    original_length: int
    payload: np.ndarray

    def __eq__(self, other):
        return (
            isinstance(other, Chunk)
            and self.original_length == other.original_length
            and np.array_equal(self.payload, other.payload)
        )


def _raw_encode(values):
    return values.copy()


def _raw_decode(words, pos, n, out):
    if pos + n > words.size:
        raise CorruptStreamError("RAW: payload truncated")
    out[:] = words[pos:pos + n]
    return pos + n


def _fast(variant):
    def enc(deltas):
        return patched.fastpfor_encode(deltas, variant)

    def dec(words, pos, n, out):
        return patched.fastpfor_decode_words(words, pos, n, out, variant)

    return enc, dec


_BASE = {
    # name: (block multiple, encoder, decoder, label)
    "vbyte": (1, basic.vbyte_encode_words, basic.vbyte_decode_words, "Variable Byte"),
    "g8iu": (1, basic.g8iu_encode_words, basic.g8iu_decode_words, "varint-G8IU"),
    "simple8b": (1, basic.simple8b_encode_words, basic.simple8b_decode_words, "Simple-8b"),
    "bp32": (128, binpack.bp32_encode, binpack.bp32_decode_words, "BP32"),
    "simdbp128": (128, binpack.simdbp128_encode, binpack.simdbp128_decode_words, "SIMD-BP128"),
    "pfor": (128, patched.pfor_encode, patched.pfor_decode_words, "PFOR"),
    "simplepfor": (128, *_fast("simple"), "SimplePFOR"),
    "fastpfor": (128, *_fast("fast"), "FastPFOR"),
    "simdfastpfor": (128, *_fast("simdfast"), "SIMD-FastPFOR"),
}

BASE_CODECS = tuple(_BASE)
STRIDE4_SUFFIX = "-s4"


def _build_registry():
    reg = {}
    for name, (bm, enc, dec, label) in _BASE.items():
        reg[name] = Codec(name, bm, delta.SCALAR, enc, dec, label)
        s4 = name + STRIDE4_SUFFIX
        reg[s4] = Codec(s4, bm, delta.STRIDE4, enc, dec, label + "*")
    reg[RAW] = Codec(RAW, 1, NO_DELTA, _raw_encode, _raw_decode, "raw")
    return reg


REGISTRY = _build_registry()
CODEC_NAMES = tuple(n for n in REGISTRY if n != RAW)


def get_codec(name):
    if isinstance(name, Codec):
        return name
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown codec {name!r}; known: {', '.join(CODEC_NAMES)}") from None


def as_sorted_array(values):
    """Validate and convert to a contiguous uint32 array that never decreases."""
    arr = np.asarray(values)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint32)
    if arr.ndim != 1:
        raise ValueError("expected a one-dimensional array")
    if arr.dtype.kind not in "ui":
        raise TypeError("values must be integers")
    if arr.min() < 0 or int(arr.max()) > 0xFFFFFFFF:
        raise ValueError("values must be unsigned 32-bit integers")
    arr = np.ascontiguousarray(arr, dtype=np.uint32)
    if arr.size > 1 and np.any(arr[1:] < arr[:-1]):
        raise ValueError("values must be sorted in non-decreasing order")
    return arr


def _encode_chunk(codec, values):
    n = values.size
    if codec.delta_mode == NO_DELTA:
        return Chunk(n, codec.encode_core(values))
    d = values.copy()
    delta.encode(d, codec.delta_mode)
    k = n - n % codec.block_multiple
    parts = []
    if k:
        parts.append(codec.encode_core(d[:k]))
    if k < n:
        parts.append(basic.vbyte_encode_words(d[k:]))
    payload = np.concatenate(parts) if len(parts) > 1 else parts[0]
    return Chunk(n, np.ascontiguousarray(payload, dtype=np.uint32))


def encode_array(codec, values):
    """Encode a sorted array into a list of chunks."""
    codec = get_codec(codec)
    arr = as_sorted_array(values)
    return [
        _encode_chunk(codec, arr[s:s + CHUNK_SIZE])
        for s in range(0, arr.size, CHUNK_SIZE)
    ]


def _decode_deltas(codec, words, pos, n, out):
    """First pass: reconstruct ``n`` deltas into ``out``; returns the end position."""
    if codec.delta_mode == NO_DELTA:
        return codec.decode_core(words, pos, n, out)
    k = n - n % codec.block_multiple
    if k:
        pos = codec.decode_core(words, pos, k, out[:k])
    if k < n:
        pos = basic.vbyte_decode_words(words, pos, n - k, out[k:])
    return pos


def decode_array(codec, chunks):
    codec = get_codec(codec)
    total = sum(c.original_length for c in chunks)
    out = np.empty(total, dtype=np.uint32)
    o = 0
    for chunk in chunks:
        n = chunk.original_length
        if n > CHUNK_SIZE:
            raise CorruptStreamError(f"chunk length {n} exceeds {CHUNK_SIZE}")
        words = np.ascontiguousarray(chunk.payload, dtype=np.uint32)
        view = out[o:o + n]
        end = _decode_deltas(codec, words, 0, n, view)
        if end != words.size:
            raise CorruptStreamError(
                f"{codec.name}: chunk used {end} of {words.size} payload words"
            )
        if codec.delta_mode != NO_DELTA:
            delta.decode(view, codec.delta_mode)
        o += n
    return out


def payload_words(chunks):
    return sum(int(c.payload.size) for c in chunks)


def bits_per_int(chunks):
    n = sum(c.original_length for c in chunks)
    if n == 0:
        raise ValueError("bits per integer is undefined for an empty array")
    return 32.0 * payload_words(chunks) / n


# --------------------------------------------------------------------------
# container

def _split_payload(codec, n, words):
    chunks = []
    pos = 0
    scratch = np.empty(min(n, CHUNK_SIZE), dtype=np.uint32)
    for s in range(0, n, CHUNK_SIZE):
        m = min(CHUNK_SIZE, n - s)
        end = _decode_deltas(codec, words, pos, m, scratch[:m])
        chunks.append(Chunk(m, words[pos:end].copy()))
        pos = end
    if pos != words.size:
        raise CorruptStreamError(f"{codec.name}: {words.size - pos} unused payload words")
    return chunks


def container_write(codec, arrays, sink):
    """Write ``arrays`` (each a list of chunks) to a path or binary file object."""
    name = get_codec(codec).name.encode("ascii")
    buf = io.BytesIO()
    buf.write(MAGIC)
    buf.write(struct.pack("<I", len(name)))
    buf.write(name)
    buf.write(struct.pack("<I", len(arrays)))
    for chunks in arrays:
        n = sum(c.original_length for c in chunks)
        words = sum(int(c.payload.size) for c in chunks)
        buf.write(struct.pack("<II", n, words))
        for c in chunks:
            buf.write(np.ascontiguousarray(c.payload, dtype="<u4").tobytes())
    data = buf.getvalue()
    if hasattr(sink, "write"):
        sink.write(data)
    else:
        with open(sink, "wb") as f:
            f.write(data)


def _take(data, pos, size):
    if pos + size > len(data):
        raise ContainerError("container truncated")
    return data[pos:pos + size], pos + size


def container_read(source):
    """Returns ``(codec_name, arrays)`` where each array is a list of chunks."""
    if hasattr(source, "read"):
        data = source.read()
    else:
        with open(source, "rb") as f:
            data = f.read()
    magic, pos = _take(data, 0, 8)
    if magic != MAGIC:
        raise ContainerError("not a container")
    raw, pos = _take(data, pos, 4)
    (name_len,) = struct.unpack("<I", raw)
    name, pos = _take(data, pos, name_len)
    try:
        codec_name = name.decode("ascii")
    except UnicodeDecodeError:
        raise ContainerError("codec name is not ASCII") from None
    if codec_name not in REGISTRY:
        raise ContainerError(f"unknown codec name {codec_name!r}")
    codec = REGISTRY[codec_name]
    raw, pos = _take(data, pos, 4)
    (count,) = struct.unpack("<I", raw)
    arrays = []
    for _ in range(count):
        raw, pos = _take(data, pos, 8)
        n, nwords = struct.unpack("<II", raw)
        raw, pos = _take(data, pos, 4 * nwords)
        words = np.frombuffer(raw, dtype="<u4").astype(np.uint32)
        try:
            arrays.append(_split_payload(codec, n, words))
        except CorruptStreamError as exc:
            raise ContainerError(f"array {len(arrays)}: {exc}") from exc
    if pos != len(data):
        raise ContainerError("trailing bytes after last array")
    return codec_name, arrays
