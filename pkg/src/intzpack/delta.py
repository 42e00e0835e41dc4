"""In-place differential coding of sorted 32-bit integer arrays.

Scalar mode stores ``x[i] - x[i-1]``; stride-4 mode leaves the first four
values alone and stores ``x[i] - x[i-4]`` so four prefix sums can proceed in
parallel. Encoding walks from the last index down and decoding walks upward,
so no scratch buffer is needed.
"""
import numpy as np
from numba import njit

SCALAR = "scalar"
STRIDE4 = "stride4"
MODES = (SCALAR, STRIDE4)


@njit(cache=True)
def _encode(v, stride):
    for i in range(v.size - 1, stride - 1, -1):
        if v[i] < v[i - stride]:
            return i
        v[i] = v[i] - v[i - stride]
    return -1


# Deltas are non-negative, so each running sum is monotone: checking the final
# sums once is enough to detect overflow anywhere.

@njit(cache=True)
def _decode1(v):
    acc = np.int64(0)
    for i in range(v.size):
        acc += v[i]
        v[i] = acc
    return acc > 0xFFFFFFFF


@njit(cache=True)
def _decode4(v):
    n = v.size
    a0 = np.int64(0)
    a1 = np.int64(0)
    a2 = np.int64(0)
    a3 = np.int64(0)
    i = 0
    while i + 4 <= n:
        a0 += v[i]
        a1 += v[i + 1]
        a2 += v[i + 2]
        a3 += v[i + 3]
        v[i] = a0
        v[i + 1] = a1
        v[i + 2] = a2
        v[i + 3] = a3
        i += 4
    if i < n:
        a0 += v[i]
        v[i] = a0
    if i + 1 < n:
        a1 += v[i + 1]
        v[i + 1] = a1
    if i + 2 < n:
        a2 += v[i + 2]
        v[i + 2] = a2
    return max(a0, a1, a2, a3) > 0xFFFFFFFF


def _decode(v, stride):
    return _decode1(v) if stride == 1 else _decode4(v)


def _stride(mode):
    if mode == SCALAR:
        return 1
    if mode == STRIDE4:
        return 4
    raise ValueError(f"unknown delta mode {mode!r}")


def _check_buffer(values):
    if not isinstance(values, np.ndarray) or values.dtype != np.uint32:
        raise TypeError("delta coding works in place on a uint32 numpy array")


def encode(values, mode=SCALAR):
    """Replace ``values`` by its deltas in place.

    Raises ``ValueError`` if the input decreases anywhere; values already
    rewritten at higher indices are restored before raising.
    """
    _check_buffer(values)
    stride = _stride(mode)
    bad = _encode(values, stride)
    if bad >= 0:
        # undo the suffix we already converted
        _decode_suffix(values, stride, bad + 1)
        raise ValueError(f"input decreases at index {bad}")


@njit(cache=True)
def _decode_suffix(v, stride, start):
    for i in range(start, v.size):
        v[i] = v[i] + v[i - stride]


def decode(values, mode=SCALAR):
    """Prefix-sum ``values`` in place; inverse of :func:`encode`.

    Raises ``OverflowError`` if a sum exceeds 32 bits; the buffer contents
    are unspecified in that case.
    """
    _check_buffer(values)
    if _decode(values, _stride(mode)):
        raise OverflowError("prefix sum exceeds 2**32 - 1")


def delta_encode_scalar(values):
    encode(values, SCALAR)


def delta_decode_scalar(values):
    decode(values, SCALAR)


def delta_encode_stride4(values):
    encode(values, STRIDE4)


def delta_decode_stride4(values):
    decode(values, STRIDE4)
