"""Admissible (maximal mirror) factors of a boundary word.

A factor ``X = W[s..e]`` is a mirror when the factor of the same length
starting ``|W|/2`` letters later reads ``backtrack(X)``.  It is admissible
when it is a mirror that cannot be grown by one letter on each side.  Every
center (a letter, or the gap between two letters) carries at most one
admissible factor, so a word has at most ``2|W|`` of them.

Internally positions are 0-based; the public :class:`AdmissibleFactor` uses
the 1-based circular positions of :class:`~polytile.words.BoundaryWord`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lce import LceIndex
from .words import BoundaryWord, Factor, backtrack, complement, reverse

ODD = "odd"
EVEN = "even"

_COMP = {"u": "d", "d": "u", "l": "r", "r": "l"}


@dataclass(frozen=True)
class Center:
    """``odd``: the letter at ``pos``; ``even``: the gap between ``pos`` and ``pos + 1``."""

    kind: str
    pos: int


@dataclass(frozen=True)
class AdmissibleFactor:
    center: Center
    span: Factor
    partner: Factor


def is_mirror(w: BoundaryWord, s: int, e: int) -> bool:
    """Whether ``W[s..e]`` (1-based, circular) is a mirror factor."""
    n = len(w)
    h = n // 2
    length = (e - s) % n + 1
    if length > h:
        raise ValueError(f"span of length {length} exceeds |W|/2 = {h}")
    word = w.word
    s0 = s - 1
    e0 = s0 + length - 1
    return all(word[(s0 + h + k) % n] == _COMP[word[(e0 - k) % n]] for k in range(length))


@dataclass
class LceTexts:
    """The two cross-text indices used to grow mirrors around every center."""

    right: LceIndex
    right_offset: int
    left: LceIndex
    left_offset: int

    @classmethod
    def build(cls, word: str) -> LceTexts:
        # doubled copies turn circular extensions into plain ones
        right, roff = LceIndex.pair(word * 2, backtrack(word) * 2)
        left, loff = LceIndex.pair(reverse(word) * 2, complement(word) * 2)
        return cls(right, roff, left, loff)


def _extensions(n: int, texts: LceTexts, centers: np.ndarray, even: bool):
    """Right and left extension lengths for an array of 0-based centers."""
    h = n // 2
    c = centers
    if even:
        # gap between c and c+1: W[c+q] vs comp(W[c+h+1-q]), W[c+1-q] vs comp(W[c+h+q])
        r_x, r_y = (c + 1) % n, (n - 1 - c - h) % n
        l_x, l_y = (n - 1 - c) % n, (c + h + 1) % n
    else:
        # letter c: W[c+q] vs comp(W[c+h-q]), W[c-q] vs comp(W[c+h+q]), q >= 1
        r_x, r_y = (c + 1) % n, (n - c - h) % n
        l_x, l_y = (n - c) % n, (c + h + 1) % n
    right = texts.right.lce_many(r_x + 1, texts.right_offset + r_y + 1)
    left = texts.left.lce_many(l_x + 1, texts.left_offset + l_y + 1)
    return right, left


class AdmissibleTable:
    """All admissible factors of one boundary word, indexed by center.

    ``odd[c]`` / ``even[c]`` hold the length of the admissible factor centered
    at letter ``c`` / the gap after letter ``c`` (0-based), or 0 for none.
    Admissible factors are also listed per position in CSR form: entries
    ``start_ptr[k]:start_ptr[k+1]`` of ``start_len`` are the lengths of the
    factors starting at ``k``, increasing; ``end_ptr``/``end_len`` likewise
    for the factors ending at ``k``.
    """

    def __init__(self, word: BoundaryWord, odd: np.ndarray, even: np.ndarray):
        self.word = word
        self.n = n = len(word)
        self.h = n // 2
        self.odd = odd
        self.even = even
        oc = np.flatnonzero(odd)
        ec = np.flatnonzero(even)
        olen = odd[oc]
        elen = even[ec]
        starts = np.concatenate([(oc - (olen - 1) // 2) % n, (ec - elen // 2 + 1) % n])
        lengths = np.concatenate([olen, elen]).astype(np.int64)
        ends = (starts + lengths - 1) % n
        self.start_ptr, self.start_pos, self.start_len = _grouped(starts, lengths, n)
        self.end_ptr, self.end_pos, self.end_len = _grouped(ends, lengths, n)
        self._odd = odd.tolist()
        self._even = even.tolist()

    def __len__(self) -> int:
        return len(self.start_len)

    def is_admissible(self, start: int, length: int) -> bool:
        """O(1) lookup of the factor at 0-based ``start`` with ``length`` >= 1."""
        n = self.n
        if length & 1:
            return self._odd[(start + (length >> 1)) % n] == length
        return self._even[(start + (length >> 1) - 1) % n] == length

    def admissible_mask(self, starts: np.ndarray, lengths: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`is_admissible`."""
        n = self.n
        half = lengths >> 1
        odd = (lengths & 1).astype(bool)
        centre = np.where(odd, starts + half, starts + half - 1) % n
        table = np.where(odd, self.odd[centre], self.even[centre])
        return (table == lengths) & (lengths > 0)

    def spans(self) -> set[tuple[int, int]]:
        """``(start, length)`` pairs with 1-based starts."""
        out = set()
        for k in range(self.n):
            for j in range(int(self.start_ptr[k]), int(self.start_ptr[k + 1])):
                out.add((k + 1, int(self.start_len[j])))
        return out

    def factors(self) -> list[AdmissibleFactor]:
        n, h = self.n, self.h
        out = []
        for kind, table in ((ODD, self.odd), (EVEN, self.even)):
            for c in np.flatnonzero(table).tolist():
                length = int(table[c])
                s = (c - (length - 1) // 2) % n if kind == ODD else (c - length // 2 + 1) % n
                out.append(
                    AdmissibleFactor(
                        Center(kind, c + 1),
                        Factor(s + 1, length),
                        Factor((s + h) % n + 1, length),
                    )
                )
        return out

    def at_center(self, center: Center) -> AdmissibleFactor | None:
        for f in self.factors():
            if f.center == center:
                return f
        return None


def _grouped(keys: np.ndarray, lengths: np.ndarray, n: int):
    order = np.lexsort((lengths, keys))
    counts = np.bincount(keys, minlength=n)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=ptr[1:])
    return ptr, keys[order].astype(np.int64), lengths[order]


def all_admissible(w: BoundaryWord, *, strict: bool = True) -> AdmissibleTable:
    """Compute the admissible factor at each of the ``2|W|`` centers.

    ``strict=False`` drops the consistency checks on the two extensions (equal
    lengths, a matching center letter, non-empty result); it exists only so
    the oracle comparison can be shown to catch a broken fast path.
    """
    n = len(w)
    h = n // 2
    word = w.word
    texts = LceTexts.build(word)
    centers = np.arange(n, dtype=np.int64)
    letters = np.frombuffer(word.encode(), dtype=np.uint8)
    comp = np.frombuffer(complement(word).encode(), dtype=np.uint8)

    # odd centers: length 2t+1 <= h-1; even centers: length 2t <= h-1
    right, left = _extensions(n, texts, centers, even=False)
    tmax = max((h - 2) // 2, 0)
    right = np.minimum(right, tmax)
    left = np.minimum(left, tmax)
    odd = 2 * right + 1
    if strict:
        center_ok = letters[(centers + h) % n] == comp
        odd = np.where(center_ok & (left == right), odd, 0)

    right, left = _extensions(n, texts, centers, even=True)
    tmax = (h - 1) // 2
    right = np.minimum(right, tmax)
    left = np.minimum(left, tmax)
    even = 2 * right
    if strict:
        even = np.where(left == right, even, 0)
    else:
        # a zero-length "factor" is kept as a bogus length-2 entry at this center
        even = np.where(even == 0, 2, even)
    return AdmissibleTable(w, odd.astype(np.int64), even.astype(np.int64))
