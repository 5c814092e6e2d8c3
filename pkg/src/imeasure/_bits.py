"""Bitmask helpers for vertex sets.

Vertices are 1-based; vertex i occupies bit i-1.  All set-valued quantities
in the hot paths are plain ints so that subset tests, unions and complements
are single machine operations.
"""

from __future__ import annotations

from typing import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of 1-based vertices into a bitmask."""
    m = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex {v} is not 1-based")
        m |= 1 << (v - 1)
    return m


def verts_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of 1-based vertices."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


def iter_bits(mask: int):
    """Yield the individual one-bit masks of `mask`, lowest first."""
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def as_mask(vertices, n: int | None = None) -> int:
    """Coerce an int mask or an iterable of vertices to a mask.

    When `n` is given, reject vertices outside 1..n.
    """
    if isinstance(vertices, int):
        m = vertices
    else:
        m = mask_of(vertices)
    if n is not None and m & ~((1 << n) - 1):
        raise ValueError(f"vertex set 0b{m:b} exceeds universe 1..{n}")
    return m
