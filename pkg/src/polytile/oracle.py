"""Brute-force references and exhaustive small-polyomino corpora.

Nothing here touches the LCE index, the fast admissible-factor computation
or the factorization scans; the functions below work straight from the
definitions so that they can be used to check those paths.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Iterable

from .admissible import EVEN, ODD, AdmissibleFactor, Center
from .factorization import BnFactorization, canonicalize
from .words import (
    BoundaryWord,
    Cell,
    Factor,
    backtrack,
    boundary_of_cells,
    complement,
    has_hole,
    normalize_cells,
)

MAX_AREA = 8


def naive_admissible(w: BoundaryWord) -> set[AdmissibleFactor]:
    """Every mirror factor ``X`` with ``W = X U X̂ V``, ``|U| = |V| >= 1``,
    ``U[1] != comp(U[-1])`` and ``V[1] != comp(V[-1])``."""
    word = w.word
    n = len(word)
    h = n // 2
    doubled = word * 3
    comp = complement(doubled)
    out = set()
    for s in range(n):
        for length in range(1, h):
            x = doubled[s : s + length]
            if doubled[s + h : s + h + length] != backtrack(x):
                continue
            e = s + length - 1
            # U = W[e+1 .. s+h-1], V = W[e+h+1 .. s-1]
            if doubled[e + 1] == comp[s + h - 1 + n]:
                continue
            if doubled[e + h + 1] == comp[s - 1 + n]:
                continue
            if length % 2:
                center = Center(ODD, (s + length // 2) % n + 1)
            else:
                center = Center(EVEN, (s + length // 2 - 1) % n + 1)
            out.add(AdmissibleFactor(center, Factor(s + 1, length), Factor((s + h) % n + 1, length)))
    return out


def naive_enumerate(w: BoundaryWord) -> list[BnFactorization]:
    """Every split ``A B C`` of every half whose other half reads ``Â B̂ Ĉ``.

    Mirror status of each ``(start, length)`` is tabulated once, which makes
    the whole search cubic in ``|W|``.
    """
    word = w.word
    n = len(word)
    h = n // 2
    tripled = word * 3
    mirror = [
        [L == 0 or tripled[s + h : s + h + L] == backtrack(tripled[s : s + L]) for L in range(h + 1)]
        for s in range(n)
    ]
    found = set()
    for a in range(n):
        for la in range(h + 1):
            if not mirror[a][la]:
                continue
            for lb in range(h - la + 1):
                lc = h - la - lb
                if sorted((la, lb, lc))[1] == 0:
                    continue
                if mirror[(a + la) % n][lb] and mirror[(a + la + lb) % n][lc]:
                    found.add(canonicalize(n, a + 1, la, lb, lc))
    return sorted(found)


def oracle_diff(w: BoundaryWord, *, strict: bool = True, square_pass: bool = True) -> dict:
    """Differences between the fast paths and the brute-force references.

    Returns an empty dict when both the admissible factors and the
    factorizations agree.  The keyword arguments are forwarded to the fast
    paths to allow mutation testing.
    """
    from .admissible import all_admissible
    from .factorization import enumerate_factorizations

    report = {}
    adm = all_admissible(w, strict=strict)
    fast_adm = {(f.span.start, f.span.length) for f in adm.factors()}
    slow_adm = {(f.span.start, f.span.length) for f in naive_admissible(w)}
    if fast_adm != slow_adm:
        report["admissible_missing"] = sorted(slow_adm - fast_adm)
        report["admissible_extra"] = sorted(fast_adm - slow_adm)
    fast = {f.cuts for f in enumerate_factorizations(w, adm, square_pass=square_pass)}
    slow = {f.cuts for f in naive_enumerate(w)}
    if fast != slow:
        report["factorizations_missing"] = sorted(slow - fast)
        report["factorizations_extra"] = sorted(fast - slow)
    if report:
        report["word"] = w.word
    return report


def _neighbors(c: Cell):
    x, y = c
    return ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1))


def redelmeier(max_area: int) -> list[list[frozenset[Cell]]]:
    """Fixed polyominoes by area (index 0 unused), holes included.

    Redelmeier's method: grow from the origin, only ever adding cells above
    row 0 or to the right of the origin in row 0, and never reconsidering a
    cell once it has been rejected on the current branch.
    """
    by_area: list[list[frozenset[Cell]]] = [[] for _ in range(max_area + 1)]

    def allowed(c: Cell) -> bool:
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    poly: list[Cell] = []
    seen: set[Cell] = {(0, 0)}

    def grow(untried: list[Cell]) -> None:
        untried = list(untried)
        while untried:
            c = untried.pop()
            poly.append(c)
            by_area[len(poly)].append(frozenset(poly))
            if len(poly) < max_area:
                new = []
                for nb in _neighbors(c):
                    if allowed(nb) and nb not in seen:
                        new.append(nb)
                seen.update(new)
                grow(untried + new)
                seen.difference_update(new)
            poly.pop()

    grow([(0, 0)])
    return by_area


def grow_fixed_polyominoes(max_area: int) -> list[set[frozenset[Cell]]]:
    """Same family as :func:`redelmeier`, by breadth-first growth and deduplication."""
    levels: list[set[frozenset[Cell]]] = [set(), {frozenset({(0, 0)})}]
    for _ in range(2, max_area + 1):
        nxt = set()
        for p in levels[-1]:
            for c in p:
                for nb in _neighbors(c):
                    if nb not in p:
                        nxt.add(normalize_cells(p | {nb}))
        levels.append(nxt)
    return levels[: max_area + 1]


def enumerate_fixed_polyominoes(max_area: int, *, include_holes: bool = False) -> list[frozenset[Cell]]:
    """All fixed polyominoes of area ``1..max_area``, translated to the origin.

    Ordered by area, then by sorted cell list.  Shapes with holes have no
    simple boundary and are dropped unless ``include_holes`` is set.
    """
    if not 1 <= max_area <= MAX_AREA:
        raise ValueError(f"max_area must be in 1..{MAX_AREA}")
    out = []
    for shapes in redelmeier(max_area)[1:]:
        level = {normalize_cells(s) for s in shapes}
        if not include_holes:
            level = {s for s in level if not has_hole(s)}
        out.extend(sorted(level, key=sorted))
    return out


def corpus_words(max_area: int) -> list[BoundaryWord]:
    return [boundary_of_cells(c) for c in enumerate_fixed_polyominoes(max_area)]


def write_corpus(path: str | Path, corpus: Iterable[frozenset[Cell]]) -> None:
    lines = [";".join(f"{x},{y}" for x, y in sorted(cells)) for cells in corpus]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_corpus(path: str | Path) -> list[frozenset[Cell]]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            out.append(frozenset(tuple(int(v) for v in cell.split(",")) for cell in line.split(";")))
    return out


def random_polyomino(rng: random.Random, area: int) -> frozenset[Cell]:
    """Random hole-free polyomino grown cell by cell from the origin."""
    while True:
        cells = {(0, 0)}
        while len(cells) < area:
            c = rng.choice(sorted(cells))
            cells.add(rng.choice(_neighbors(c)))
        cells = frozenset(cells)
        if not has_hole(cells):
            return normalize_cells(cells)
