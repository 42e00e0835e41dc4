import io

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import sorted_u32
from intzpack import core
from intzpack.errors import ContainerError, CorruptStreamError

CODECS = list(core.CODEC_NAMES)


def test_registry_names():
    base = ["vbyte", "g8iu", "simple8b", "bp32", "simdbp128",
            "pfor", "simplepfor", "fastpfor", "simdfastpfor"]
    assert sorted(CODECS) == sorted(base + [b + "-s4" for b in base])
    assert core.get_codec("bp32-s4").delta_mode == "stride4"
    with pytest.raises(ValueError):
        core.get_codec("lz4")


@pytest.mark.parametrize("codec", CODECS)
@given(x=sorted_u32(max_size=600, max_delta=1 << 20))
def test_pipeline_roundtrip(codec, x):
    assert np.array_equal(core.decode_array(codec, core.encode_array(codec, x)), x)


@pytest.mark.parametrize("codec", ["vbyte", "bp32", "simdfastpfor-s4"])
def test_chunking(codec):
    x = np.arange(0, 3 * (1 << 16) + 5, dtype=np.uint32) * 7
    chunks = core.encode_array(codec, x)
    assert [c.original_length for c in chunks] == [1 << 16] * 3 + [5]
    assert np.array_equal(core.decode_array(codec, chunks), x)


def test_each_chunk_restarts_deltas():
    x = np.arange(1 << 17, dtype=np.uint32) + 1000
    _, second = core.encode_array("vbyte", x)
    # the first delta of the second chunk is the full value 66536
    head = second.payload.view(np.uint8)[:4].tolist()
    assert head == [66536 & 127, (66536 >> 7) & 127, 0x80 | 66536 >> 14, 0x81]


def test_remainder_goes_to_vbyte():
    x = np.arange(130, dtype=np.uint32)
    (chunk,) = core.encode_array("bp32", x)
    # the two leftover deltas are both 1
    tail = chunk.payload[-1:].view(np.uint8).tolist()
    assert tail == [0x81, 0x81, 0, 0]


def test_input_validation():
    with pytest.raises(ValueError):
        core.encode_array("vbyte", [3, 2])
    with pytest.raises(ValueError):
        core.encode_array("vbyte", [-1, 2])
    with pytest.raises(ValueError):
        core.encode_array("vbyte", [1 << 32])
    with pytest.raises(TypeError):
        core.encode_array("vbyte", [0.5, 1.0])
    # decrease across a chunk boundary
    x = np.arange(1 << 16, dtype=np.uint32)
    with pytest.raises(ValueError):
        core.encode_array("vbyte", np.concatenate([x, [0]]).astype(np.uint32))
    assert core.encode_array("vbyte", []) == []


def test_bits_per_int_vbyte_two_bytes_each():
    x = np.cumsum(np.full(4096, 200, np.uint32), dtype=np.uint32)
    assert core.bits_per_int(core.encode_array("vbyte", x)) == 16.0


def test_trailing_words_rejected():
    chunks = core.encode_array("bp32", np.arange(256, dtype=np.uint32))
    chunks[0] = core.Chunk(256, np.append(chunks[0].payload, np.uint32(0)))
    with pytest.raises(CorruptStreamError):
        core.decode_array("bp32", chunks)


@pytest.mark.parametrize("codec", ["simple8b", "pfor-s4", "RAW"])
@given(arrays=st.lists(sorted_u32(max_size=300), max_size=4))
def test_container_roundtrip(codec, arrays):
    encoded = [core.encode_array(codec, a) for a in arrays]
    buf = io.BytesIO()
    core.container_write(codec, encoded, buf)
    name, back = core.container_read(io.BytesIO(buf.getvalue()))
    assert name == codec
    assert back == encoded
    for a, chunks in zip(arrays, back):
        assert np.array_equal(core.decode_array(name, chunks), a)


def test_container_layout(tmp_path):
    path = tmp_path / "x.bin"
    core.container_write("RAW", [core.encode_array("RAW", [1, 2, 3])], path)
    data = path.read_bytes()
    assert data[:8] == b"INTZPK01"
    assert data[8:12] == (3).to_bytes(4, "little") and data[12:15] == b"RAW"
    assert data[15:19] == (1).to_bytes(4, "little")
    assert data[19:27] == (3).to_bytes(4, "little") * 2
    assert np.frombuffer(data[27:], "<u4").tolist() == [1, 2, 3]


def _container(codec, arrays):
    buf = io.BytesIO()
    core.container_write(codec, [core.encode_array(codec, a) for a in arrays], buf)
    return buf.getvalue()


def test_container_errors():
    good = _container("fastpfor", [np.arange(1000, dtype=np.uint32)])
    with pytest.raises(ContainerError):
        core.container_read(io.BytesIO(b"NOTMAGIC" + good[8:]))
    with pytest.raises(ContainerError):
        core.container_read(io.BytesIO(good[:-4]))
    with pytest.raises(ContainerError):
        core.container_read(io.BytesIO(good + b"\0"))
    bad = bytearray(good)
    bad[12:20] = b"nosuchco"
    bad[8:12] = (8).to_bytes(4, "little")
    with pytest.raises(ContainerError):
        core.container_read(io.BytesIO(bytes(bad)))
