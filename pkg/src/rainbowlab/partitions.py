"""Set partitions as restricted growth strings (RGS).

An RGS ``a`` of length m satisfies ``a[0] == 0`` and ``a[i] <= max(a[:i]) + 1``.
Each partition of ``{0..m-1}`` has exactly one RGS, which is also its canonical
coloring. Everything here enumerates in lexicographic RGS order.
"""
from __future__ import annotations

from typing import Iterator

import numpy as np


def bell(m: int) -> int:
    """Bell number B(m) via the Bell triangle."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """Yield every RGS of length ``m`` in lexicographic order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    # pmax[i] = max(a[:i]), defined for i >= 1
    pmax = [0] * m
    while True:
        yield tuple(a)
        i = m - 1
        while i > 0 and a[i] > pmax[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(pmax[i], a[i])
        for j in range(i + 1, m):
            a[j] = 0
            pmax[j] = top


def _extend(block: np.ndarray, maxes: np.ndarray, steps: int) -> tuple[np.ndarray, np.ndarray]:
    for _ in range(steps):
        fan = maxes.astype(np.int64) + 2
        parent = np.repeat(np.arange(len(block)), fan)
        offsets = np.repeat(np.cumsum(fan) - fan, fan)
        vals = (np.arange(len(parent)) - offsets).astype(block.dtype)
        block = np.concatenate([block[parent], vals[:, None]], axis=1)
        maxes = np.maximum(maxes[parent], vals)
    return block, maxes


def rgs_blocks(m: int, tail: int = 8) -> Iterator[np.ndarray]:
    """Yield all RGS of length ``m`` as int8 arrays of rows, in lexicographic order.

    The space is split on prefixes of length ``m - tail`` so each block holds at
    most the completions of one prefix.
    """
    if m == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    head = max(1, m - tail)
    prefixes, pmax = _extend(np.zeros((1, 1), dtype=np.int8), np.zeros(1, dtype=np.int8), head - 1)
    if head == m:
        yield prefixes
        return
    for i in range(len(prefixes)):
        block, _ = _extend(prefixes[i:i + 1], pmax[i:i + 1], m - head)
        yield block
