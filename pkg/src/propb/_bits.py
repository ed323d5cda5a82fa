"""Bit-level helpers: vertex masks and the block patterns used by the scanner."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable


def mask_of(members: Iterable[int]) -> int:
    """Bitmask with one bit per vertex index."""
    m = 0
    for u in members:
        m |= 1 << u
    return m


def bit_indices(x: int) -> list[int]:
    """Set-bit positions of x, ascending."""
    if x == 0:
        return []
    out = []
    data = x.to_bytes((x.bit_length() + 7) // 8, "little")
    for i, byte in enumerate(data):
        base = i << 3
        while byte:
            low = byte & -byte
            out.append(base + low.bit_length() - 1)
            byte ^= low
    return out


def mask_members(mask: int) -> tuple[int, ...]:
    """Vertices of an edge mask, ascending."""
    return tuple(bit_indices(mask))


@lru_cache(maxsize=None)
def scan_ones(t_bits: int) -> int:
    """All-ones pattern over a block of 2**t_bits scan positions."""
    return (1 << (1 << t_bits)) - 1


@lru_cache(maxsize=None)
def scan_bit_pattern(b: int, t_bits: int) -> int:
    """Pattern whose bit j (j < 2**t_bits) equals bit b of the integer j.

    Requires b < t_bits.  Built by doubling: 2**b zeros, 2**b ones,
    repeated out to the block width.
    """
    pattern = ((1 << (1 << b)) - 1) << (1 << b)
    width = 1 << (b + 1)
    size = 1 << t_bits
    while width < size:
        pattern |= pattern << width
        width <<= 1
    return pattern


@lru_cache(maxsize=None)
def scan_popcount_pattern(t_bits: int, count: int) -> int:
    """Pattern whose bit j (j < 2**t_bits) is set iff popcount(j) == count."""
    if count < 0 or count > t_bits:
        return 0
    if t_bits == 0:
        return 1
    low = scan_popcount_pattern(t_bits - 1, count)
    high = scan_popcount_pattern(t_bits - 1, count - 1)
    return low | (high << (1 << (t_bits - 1)))
