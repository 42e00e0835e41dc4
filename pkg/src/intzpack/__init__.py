"""Compression of sorted 32-bit integer arrays."""
from .core import (
    CODEC_NAMES, Chunk, Codec, bits_per_int, container_read, container_write,
    decode_array, encode_array, get_codec,
)
from .errors import ContainerError, CorruptStreamError

__version__ = "0.1.0"
__all__ = [
    "CODEC_NAMES", "Chunk", "Codec", "ContainerError", "CorruptStreamError", "bits_per_int",
    "container_read", "container_write", "decode_array", "encode_array", "get_codec",
]
