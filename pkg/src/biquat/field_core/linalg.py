"""Gaussian elimination over GF(2) with integers as bit vectors."""

from __future__ import annotations


def eliminate(cols: list[int]) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """Echelonize column vectors.

    Returns ``(basis, kernel)`` where ``basis`` maps a pivot bit to a pair
    ``(vector, combination)`` and ``kernel`` lists combinations (bitmasks over
    column indices) that sum to zero.
    """
    basis: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for i, v in enumerate(cols):
        m = 1 << i
        while v:
            p = v.bit_length() - 1
            hit = basis.get(p)
            if hit is None:
                basis[p] = (v, m)
                break
            v ^= hit[0]
            m ^= hit[1]
        else:
            kernel.append(m)
    return basis, kernel


def reduce_target(basis: dict[int, tuple[int, int]], target: int) -> int | None:
    m = 0
    while target:
        p = target.bit_length() - 1
        hit = basis.get(p)
        if hit is None:
            return None
        target ^= hit[0]
        m ^= hit[1]
    return m


def reduce_partial(basis: dict[int, tuple[int, int]], target: int) -> tuple[int, int]:
    """Clear as many high bits of ``target`` as the basis allows.

    Returns ``(remainder, combination)``.
    """
    m = 0
    rem = 0
    while target:
        p = target.bit_length() - 1
        hit = basis.get(p)
        if hit is None:
            rem |= 1 << p
            target ^= 1 << p
        else:
            target ^= hit[0]
            m ^= hit[1]
    return rem, m


def solve_affine(cols: list[int], target: int) -> int | None:
    """A combination ``s`` (bitmask) with XOR of ``cols[i]`` over ``i in s`` equal to ``target``."""
    basis, _ = eliminate(cols)
    return reduce_target(basis, target)


def solve_affine_all(cols: list[int], target: int) -> tuple[int | None, list[int]]:
    """Particular solution (or None) and a kernel basis."""
    basis, kernel = eliminate(cols)
    return reduce_target(basis, target), kernel


class BitIndexer:
    """Assigns consecutive bit positions to hashable coordinate keys."""

    def __init__(self):
        self.index: dict = {}

    def bit(self, key) -> int:
        i = self.index.get(key)
        if i is None:
            i = self.index[key] = len(self.index)
        return i

    def pack(self, keys) -> int:
        v = 0
        for key in keys:
            v ^= 1 << self.bit(key)
        return v
