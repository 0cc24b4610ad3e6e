"""Bitmask helpers.  Vertex ``v`` is bit ``1 << v``."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def first_k(mask: int, k: int) -> int:
    """The ``k`` lowest-indexed members of ``mask`` (all of them if fewer)."""
    out = 0
    while mask and k > 0:
        low = mask & -mask
        out |= low
        mask ^= low
        k -= 1
    return out
