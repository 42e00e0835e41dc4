import numpy as np
import pytest
from hypothesis import given

import oracle
from conftest import sorted_u32
from intzpack import delta


@given(sorted_u32())
def test_scalar_matches_oracle(x):
    v = x.copy()
    delta.encode(v, delta.SCALAR)
    assert v.tolist() == oracle.deltas(x.tolist(), 1)
    delta.decode(v, delta.SCALAR)
    assert np.array_equal(v, x)


@given(sorted_u32())
def test_stride4_matches_oracle(x):
    v = x.copy()
    delta.encode(v, delta.STRIDE4)
    assert v.tolist() == oracle.deltas(x.tolist(), 4)
    assert oracle.prefix_sum(v.tolist(), 4) == x.tolist()
    delta.decode(v, delta.STRIDE4)
    assert np.array_equal(v, x)


def test_examples():
    v = np.array([1, 4, 9, 10, 20], np.uint32)
    delta.delta_encode_scalar(v)
    assert v.tolist() == [1, 3, 5, 1, 10]
    w = np.array([1, 2, 3, 4, 5, 7, 9, 11], np.uint32)
    delta.delta_encode_stride4(w)
    assert w.tolist() == [1, 2, 3, 4, 4, 5, 6, 7]
    delta.delta_decode_stride4(w)
    assert w.tolist() == [1, 2, 3, 4, 5, 7, 9, 11]


def test_decreasing_input_is_rejected_and_restored():
    v = np.array([5, 6, 3, 8, 9], np.uint32)
    with pytest.raises(ValueError):
        delta.encode(v)
    assert v.tolist() == [5, 6, 3, 8, 9]


def test_overflow_on_decode():
    v = np.array([0xFFFFFFFF, 1], np.uint32)
    with pytest.raises(OverflowError):
        delta.decode(v)


def test_requires_uint32_buffer():
    with pytest.raises(TypeError):
        delta.encode([1, 2, 3])
    with pytest.raises(TypeError):
        delta.encode(np.arange(4, dtype=np.int64))
    with pytest.raises(ValueError):
        delta.encode(np.arange(4, dtype=np.uint32), "stride8")


def test_short_arrays_unchanged_in_stride4():
    v = np.array([7, 3, 9], np.uint32)
    delta.encode(v, delta.STRIDE4)
    assert v.tolist() == [7, 3, 9]
