"""Longest common extension queries over a fixed text.

The index is a suffix array with its LCP array (built by libdivsufsort via
``pydivsufsort``) plus a sparse table answering range-minimum queries in
constant time.  Positions are 1-based throughout.
"""

from __future__ import annotations

import numpy as np
from pydivsufsort import divsufsort, kasai

SEPARATOR = "\x00"


class LceIndex:
    """Constant-time ``lce(i, j)`` after near-linear preprocessing.

    >>> idx = LceIndex("ururu")
    >>> idx.lce(1, 3)
    3
    """

    def __init__(self, text: str):
        if not text:
            raise ValueError("cannot index an empty text")
        self.text = text
        data = np.frombuffer(text.encode("latin-1"), dtype=np.uint8).copy()
        sa = divsufsort(data)
        lcp = kasai(data, sa)
        self._rank = np.empty(len(text), dtype=np.int64)
        self._rank[sa] = np.arange(len(text))
        # level k holds min(lcp[r .. r + 2**k - 1])
        self._table = [lcp.astype(np.int32)]
        width = 1
        while 2 * width < len(lcp):
            prev = self._table[-1]
            self._table.append(np.minimum(prev[:-width], prev[width:]))
            width *= 2

    @classmethod
    def pair(cls, x: str, y: str) -> tuple[LceIndex, int]:
        """Index ``x`` and ``y`` together; returns the index and the offset of ``y``.

        Position ``j`` of ``y`` is position ``offset + j`` of the index.  A
        separator keeps extensions from running from ``x`` into ``y``.
        """
        if SEPARATOR in x or SEPARATOR in y:
            raise ValueError("texts may not contain the separator character")
        return cls(x + SEPARATOR + y), len(x) + 1

    def __len__(self) -> int:
        return len(self.text)

    def lce(self, i: int, j: int) -> int:
        n = len(self.text)
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions ({i}, {j}) out of range 1..{n}")
        if i == j:
            return n - i + 1
        a, b = self._rank[i - 1], self._rank[j - 1]
        lo, hi = (a, b) if a < b else (b, a)
        k = int(hi - lo).bit_length() - 1
        level = self._table[k]
        return int(min(level[lo], level[hi - (1 << k)]))

    def lce_many(self, i, j) -> np.ndarray:
        """Vectorized :meth:`lce` over equal-length position arrays."""
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        n = len(self.text)
        if i.size and (i.min() < 1 or j.min() < 1 or i.max() > n or j.max() > n):
            raise IndexError(f"positions out of range 1..{n}")
        out = np.empty(i.shape, dtype=np.int64)
        same = i == j
        out[same] = n - i[same] + 1
        a = self._rank[i[~same] - 1]
        b = self._rank[j[~same] - 1]
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        span = hi - lo
        # floor(log2(span)) for span >= 1
        k = np.frexp(span.astype(np.float64))[1] - 1
        res = np.empty(span.shape, dtype=np.int64)
        for level in np.unique(k):
            sel = k == level
            table = self._table[level]
            res[sel] = np.minimum(table[lo[sel]], table[hi[sel] - (1 << int(level))])
        out[~same] = res
        return out


def naive_lce(text: str, i: int, j: int) -> int:
    """Letter-by-letter scan; the reference for :class:`LceIndex`."""
    k = 0
    i -= 1
    j -= 1
    while i + k < len(text) and j + k < len(text) and text[i + k] == text[j + k]:
        k += 1
    return k
