"""Enumeration of BN factorizations ``W = A B C Â B̂ Ĉ``.

A factorization is stored by its six cut positions: the 1-based end
positions of ``A, B, C, Â, B̂, Ĉ`` in the circular word.  Relabelings of the
same split (rotating the labels, or moving an empty factor between the
``B`` and ``C`` slots) share one canonical form, see :func:`canonicalize`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .admissible import AdmissibleTable, all_admissible
from .words import BoundaryWord, Factor, backtrack

LABELS = ("A", "B", "C", "Â", "B̂", "Ĉ")


class IntervalError(AssertionError):
    """The early-exit scan missed a factorization found by the full scan."""


@dataclass(frozen=True, order=True)
class BnFactorization:
    cuts: tuple[int, int, int, int, int, int]
    n: int

    @property
    def lengths(self) -> tuple[int, ...]:
        c = self.cuts
        return tuple((c[k] - c[k - 1]) % self.n for k in range(6))

    @property
    def factors(self) -> tuple[Factor, ...]:
        c = self.cuts
        return tuple(Factor(c[k - 1] % self.n + 1, length) for k, length in enumerate(self.lengths))

    @property
    def a(self) -> Factor:
        return self.factors[0]

    @property
    def b(self) -> Factor:
        return self.factors[1]

    @property
    def c(self) -> Factor:
        return self.factors[2]

    def texts(self, w: BoundaryWord) -> tuple[str, ...]:
        return tuple(w.text(f) for f in self.factors)


def _ends(n: int, start: int, la: int, lb: int, lc: int) -> list[int]:
    """1-based end positions of the six factors of a labeled split starting at ``start``."""
    h = n // 2
    e = start - 1
    ends = []
    for length in (la, lb, lc):
        e += length
        ends.append(e)
    ends += [x + h for x in ends]
    return [(x - 1) % n + 1 for x in ends]


def canonicalize(n: int, start: int, la: int, lb: int, lc: int) -> BnFactorization:
    """Canonical form of the labeled split with ``A`` at 1-based ``start``.

    Six non-empty factors: the least of the six label rotations of the cut
    tuple.  One empty factor (a split into four pieces ``X Y X̂ Ŷ``): the
    empty factor is placed in the ``C`` slot and the least of the four
    resulting cut tuples is taken.
    """
    if 2 * (la + lb + lc) != n or min(la, lb, lc) < 0:
        raise ValueError("factor lengths must sum to |W|/2")
    if sorted((la, lb, lc))[1] == 0:
        raise ValueError("at most one of A, B, C may be empty")
    ends = _ends(n, start, la, lb, lc)
    if 0 not in (la, lb, lc):
        return BnFactorization(min(tuple(ends[k:] + ends[:k]) for k in range(6)), n)
    pieces = [e for k, e in enumerate(ends) if e != ends[k - 1]]
    best = min(
        (p[0], p[1], p[1], p[2], p[3], p[3])
        for k in range(4)
        for p in [pieces[k:] + pieces[:k]]
    )
    return BnFactorization(best, n)


def from_texts(w: BoundaryWord, a: str, b: str, c: str, start: int | None = None) -> list[BnFactorization]:
    """Canonical factorizations of ``w`` whose labeled split reads ``a|b|c``.

    Every rotation is tried unless ``start`` pins the 1-based start of ``a``.
    """
    n = len(w)
    half = a + b + c
    if 2 * len(half) != n:
        return []
    doubled = w.word * 2
    starts = [start] if start is not None else range(1, n + 1)
    out = []
    other = backtrack(a) + backtrack(b) + backtrack(c)
    tripled = doubled + w.word
    for s in starts:
        if tripled[s - 1 : s - 1 + n] == half + other:
            out.append(canonicalize(n, s, len(a), len(b), len(c)))
    return sorted(set(out))


# below this many live candidates the scan continues in plain Python
_TAIL = 32


class _Collector:
    """Gathers cut tuples, keeping only the labeling whose ``A`` ends first.

    That labeling is the canonical one, so every factorization is stored
    once however many of its labelings the scans reach.
    """

    def __init__(self, n: int):
        self.n = n
        self.h = n // 2
        self.blocks: list[np.ndarray] = []
        self.found: set[tuple[int, ...]] = set()

    def hexagons(self, a: np.ndarray, la: np.ndarray, lb: np.ndarray) -> None:
        n, h = self.n, self.h
        ea = (a + la - 1) % n
        eb = (ea + lb) % n
        ec = (a + h - 1) % n
        eb2 = (eb + h) % n
        ec2 = (ec + h) % n
        keep = (ea < h) & (ea < eb) & (ea < ec) & (ea < eb2) & (ea < ec2)
        if keep.any():
            self.blocks.append(np.stack([ea, eb, ec, ea + h, eb2, ec2], axis=1)[keep] + 1)

    def hexagon(self, a: int, la: int, lb: int) -> None:
        n, h = self.n, self.h
        ea = (a + la - 1) % n
        eb = (ea + lb) % n
        ec = (a + h - 1) % n
        if ea < h and ea < eb and ea < ec and ea < (eb + h) % n and ea < (ec + h) % n:
            self.found.add((ea + 1, eb + 1, ec + 1, ea + h + 1, (eb + h) % n + 1, (ec + h) % n + 1))

    def squares(self, a: np.ndarray, la: np.ndarray) -> None:
        n, h = self.n, self.h
        ea = (a + la - 1) % n
        eb = (a + h - 1) % n
        eb2 = (eb + h) % n
        keep = (ea < h) & (ea < eb) & (ea < eb2)
        if keep.any():
            self.blocks.append(np.stack([ea, eb, eb, ea + h, eb2, eb2], axis=1)[keep] + 1)

    def cuts(self) -> set[tuple[int, ...]]:
        out = set(self.found)
        for block in self.blocks:
            out.update(map(tuple, block.tolist()))
        return out


def _scan(
    adm: AdmissibleTable,
    out: _Collector,
    *,
    fill_b: bool,
    early_exit: bool,
) -> None:
    """Complete every admissible ``A`` with a second factor tried longest first.

    ``fill_b``: the candidates are the factors ``B`` starting right after
    ``A`` and the remainder ``C`` is looked up; otherwise the candidates are
    the factors ``C`` ending at the end of the half and ``B`` is looked up.
    With ``early_exit`` the candidates for one ``A`` stop at the first
    failed lookup.
    """
    n, h = adm.n, adm.h
    a = adm.start_pos
    la = adm.start_len
    if fill_b:
        ptr, pos, lens = adm.start_ptr, adm.start_pos, adm.start_len
        anchor = (a + la) % n
    else:
        ptr, pos, lens = adm.end_ptr, adm.end_pos, adm.end_len
        anchor = (a + h - 1) % n
    # longest candidate with |A| + |X| < |W|/2 at the anchor position
    keys = pos * (h + 1) + lens
    top = np.searchsorted(keys, anchor * (h + 1) + (h - la - 1), side="right") - 1
    lo = ptr[anchor]

    def other(ai, lai, x):
        # (start, length) of the piece that is looked up, and |B|
        if fill_b:
            return (ai + lai + x) % n, h - lai - x, x
        lb = h - lai - x
        return (ai + lai) % n, lb, lb

    idx = np.flatnonzero(top >= lo)
    q = top[idx]
    while len(idx) > _TAIL:
        ai, lai = a[idx], la[idx]
        start, length, lb = other(ai, lai, lens[q])
        ok = adm.admissible_mask(start, length)
        out.hexagons(ai[ok], lai[ok], lb[ok])
        live = q > lo[idx]
        if early_exit:
            live &= ok
        idx, q = idx[live], q[live] - 1

    lens_list = lens.tolist()
    is_adm = adm.is_admissible
    for i, qi in zip(idx.tolist(), q.tolist()):
        ai, lai, loi = int(a[i]), int(la[i]), int(lo[i])
        for j in range(qi, loi - 1, -1):
            start, length, lb = other(ai, lai, lens_list[j])
            if is_adm(start, length):
                out.hexagon(ai, lai, lb)
            elif early_exit:
                break


def _scan_square(adm: AdmissibleTable, out: _Collector) -> None:
    """Factorizations with an empty ``C``: the rest of the half after ``A`` is ``B``."""
    n, h = adm.n, adm.h
    a, la = adm.start_pos, adm.start_len
    ok = (la < h) & adm.admissible_mask((a + la) % n, h - la)
    out.squares(a[ok], la[ok])


def _run(adm: AdmissibleTable, square_pass: bool, early_exit: bool) -> set[tuple[int, ...]]:
    out = _Collector(adm.n)
    _scan(adm, out, fill_b=True, early_exit=early_exit)
    _scan(adm, out, fill_b=False, early_exit=early_exit)
    if square_pass:
        _scan_square(adm, out)
    return out.cuts()


def enumerate_factorizations(
    w: BoundaryWord,
    adm: AdmissibleTable | None = None,
    *,
    square_pass: bool = True,
    check_intervals: bool = False,
) -> list[BnFactorization]:
    """All BN factorizations of ``w``, canonical and sorted by cut tuple.

    With ``check_intervals`` the scans are repeated without early exit and
    :class:`IntervalError` is raised if that finds anything more.
    ``square_pass=False`` skips the factorizations with an empty factor and
    is only meant for mutation tests.
    """
    if adm is None:
        adm = all_admissible(w)
    found = _run(adm, square_pass, early_exit=True)
    if check_intervals:
        missed = _run(adm, square_pass, early_exit=False) - found
        if missed:
            raise IntervalError(f"early exit missed {sorted(missed)}")
    n = len(w)
    return [BnFactorization(cuts, n) for cuts in sorted(found)]


def is_tileable(w: BoundaryWord) -> bool:
    return bool(enumerate_factorizations(w))


def count_factorizations(w: BoundaryWord) -> int:
    return len(enumerate_factorizations(w))


def count_tilings(w: BoundaryWord, factorizations: list[BnFactorization] | None = None) -> int:
    """Number of distinct regular tilings, i.e. distinct lattices."""
    from .tiling import lattice_of

    if factorizations is None:
        factorizations = enumerate_factorizations(w)
    return len({lattice_of(w, f).hnf for f in factorizations})
