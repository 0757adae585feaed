"""Bitset helpers: subsets of [0, limit] packed into a single Python int.

Bit x of a bitset is set iff x belongs to the subset.  All the heavy
arithmetic of the package (membership tables, the order filtration) runs on
these, because shifting an int by a generator and OR-ing is a whole-window
operation at C speed.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def window_mask(limit: int) -> int:
    """Mask selecting bits 0..limit inclusive."""
    return (1 << (limit + 1)) - 1


def closure_bits(gens: Iterable[int], limit: int) -> int:
    """Additive closure of ``gens`` (including 0), intersected with [0, limit].

    For each generator the shift doubles (g, 2g, 4g, ...), which reaches every
    multiple of g inside the window in O(log(limit/g)) big-int operations.
    """
    mask = window_mask(limit)
    bits = 1
    for g in gens:
        shift = g
        while shift <= limit:
            bits |= (bits << shift) & mask
            shift <<= 1
    return bits


def shift_sum(bits: int, gens: Iterable[int], mask: int) -> int:
    """Minkowski sum of the set ``bits`` with the generator set, windowed.

    Correct for saturated sets: if ``bits`` encodes h*M for the semigroup
    generated by ``gens`` then the result encodes (h+1)*M, because every
    element of M is a generator plus a semigroup element.
    """
    out = 0
    for g in gens:
        out |= bits << g
    return out & mask


def largest_missing(bits: int, limit: int) -> int:
    """Largest x in [0, limit] whose bit is clear, or -1 if none."""
    comp = ~bits & window_mask(limit)
    return comp.bit_length() - 1


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_to_tuple(bits: int) -> tuple[int, ...]:
    return tuple(iter_bits(bits))
