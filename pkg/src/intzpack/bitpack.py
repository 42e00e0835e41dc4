"""Fixed-width bit packing of 32-bit unsigned integers.

Two layouts are provided:

* scalar: 32 integers at bit width ``b`` become ``b`` words. Integer ``i``
  occupies bits ``[i*b, (i+1)*b)`` of the little-endian bit string formed by
  the output words, low bits first.
* vertical: 128 integers become ``4*b`` words. Integer ``i`` belongs to lane
  ``i % 4``; each lane is packed with the scalar layout and word ``k`` of lane
  ``j`` is stored at position ``4*k + j``.

Unused high bits of the last word are always zero.
"""
import numpy as np
from numba import njit

from ._unrolled import (
    pack_group,
    pack_run,
    pack_vertical,
    unpack_group,
    unpack_run,
    unpack_vertical,
)

__all__ = [
    "pack_scalar32",
    "pack_scalar32_masked",
    "unpack_scalar32",
    "pack_vertical128",
    "pack_vertical128_masked",
    "unpack_vertical128",
    "max_bitwidth",
    "bit_length",
    "pack_group",
    "unpack_group",
    "pack_run",
    "unpack_run",
    "pack_vertical",
    "unpack_vertical",
    "bits32",
    "max_bits_of",
]


@njit(cache=True)
def bits32(x):
    """Number of bits needed for ``x`` (0 for 0)."""
    n = 0
    while x:
        x >>= 1
        n += 1
    return n


@njit(cache=True)
def max_bits_of(src, start, count):
    acc = 0
    for i in range(start, start + count):
        acc |= src[i]
    return bits32(acc)


def bit_length(x):
    return int(x).bit_length()


def _check_width(b):
    if not 0 <= b <= 32:
        raise ValueError(f"bit width must be in [0, 32], got {b}")


def _as_block(values, size):
    arr = np.asarray(values)
    if arr.shape != (size,):
        raise ValueError(f"expected {size} values, got shape {arr.shape}")
    if arr.dtype.kind not in "ui":
        raise TypeError("values must be integers")
    if arr.size and (arr.min() < 0 or int(arr.max()) > 0xFFFFFFFF):
        raise ValueError("values must be unsigned 32-bit integers")
    return np.ascontiguousarray(arr, dtype=np.uint32)


def _check_fits(arr, b):
    if b < 32 and arr.size and int(arr.max()) >> b:
        raise ValueError(f"value {int(arr.max())} does not fit in {b} bits")


def pack_scalar32(values, b):
    """Pack 32 integers, each ``< 2**b``, into ``b`` words."""
    _check_width(b)
    arr = _as_block(values, 32)
    _check_fits(arr, b)
    out = np.zeros(b, dtype=np.uint32)
    pack_group(arr, 0, 1, out, 0, 1, b)
    return out


def pack_scalar32_masked(values, b):
    """Like :func:`pack_scalar32` but keeps only the low ``b`` bits of each value."""
    _check_width(b)
    arr = _as_block(values, 32)
    out = np.zeros(b, dtype=np.uint32)
    pack_group(arr, 0, 1, out, 0, 1, b)
    return out


def unpack_scalar32(words, b):
    _check_width(b)
    w = np.ascontiguousarray(words, dtype=np.uint32)
    if w.size < b:
        raise ValueError(f"need {b} words to unpack width {b}, got {w.size}")
    out = np.zeros(32, dtype=np.uint32)
    unpack_group(w, 0, 1, out, 0, 1, b)
    return out


def pack_vertical128(values, b):
    """Pack 128 integers, each ``< 2**b``, into ``4*b`` interleaved words."""
    _check_width(b)
    arr = _as_block(values, 128)
    _check_fits(arr, b)
    out = np.zeros(4 * b, dtype=np.uint32)
    pack_vertical(arr, 0, out, 0, b)
    return out


def pack_vertical128_masked(values, b):
    _check_width(b)
    arr = _as_block(values, 128)
    out = np.zeros(4 * b, dtype=np.uint32)
    pack_vertical(arr, 0, out, 0, b)
    return out


def unpack_vertical128(words, b):
    _check_width(b)
    w = np.ascontiguousarray(words, dtype=np.uint32)
    if w.size < 4 * b:
        raise ValueError(f"need {4 * b} words to unpack width {b}, got {w.size}")
    out = np.zeros(128, dtype=np.uint32)
    unpack_vertical(w, 0, out, 0, b)
    return out


def max_bitwidth(values):
    """Largest bit length among ``values``, computed from their bitwise OR.

    An empty input gives 0.
    """
    arr = np.asarray(values, dtype=np.uint64)
    if arr.size == 0:
        return 0
    return int(np.bitwise_or.reduce(arr)).bit_length()
