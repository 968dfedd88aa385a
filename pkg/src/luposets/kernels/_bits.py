"""Packing helpers shared by both backends."""

from __future__ import annotations

import numpy as np


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a (m, n) bool matrix into (m, W) uint64 rows, W = ceil(n/64)."""
    bits = np.ascontiguousarray(bits, dtype=bool)
    m, n = bits.shape
    W = max(1, (n + 63) // 64)
    packed = np.packbits(bits, axis=1, bitorder="little")
    buf = np.zeros((m, W * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view("<u8").astype(np.uint64)


def unpack_rows(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`."""
    m = words.shape[0]
    buf = np.ascontiguousarray(words).view(np.uint8).reshape(m, -1)
    bits = np.unpackbits(buf, axis=1, bitorder="little")
    return bits[:, :n].astype(bool)
