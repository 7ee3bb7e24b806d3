"""Letters, words and polyomino boundary words.

Words are plain ``str`` objects over the alphabet ``udlr``.  A
:class:`BoundaryWord` is a validated, clockwise, start-normalized circular
word together with its vertex path.  Circular indices are 1-based and may be
negative, so ``W[-1]`` is the last letter and index 0 is rejected.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

LETTERS = "udlr"
STEP = {"u": (0, 1), "d": (0, -1), "l": (-1, 0), "r": (1, 0)}

_COMPLEMENT = str.maketrans("udlr", "durl")
_TOKEN = re.compile(r"([udlr]+)(?:\^(-?\d+))?")

Cell = tuple[int, int]


class WordError(ValueError):
    """Raised for malformed words or invalid boundary words."""


def parse_word(text: str) -> str:
    """Expand a textual word such as ``"u r^3 d l^3"`` into ``"urrrdlll"``.

    Letters are case-insensitive.  ``x^k`` repeats the preceding run of
    letters ``k`` times; tokens may be separated by whitespace.
    """
    out = []
    for token in text.lower().split():
        pos = 0
        while pos < len(token):
            m = _TOKEN.match(token, pos)
            if m is None:
                raise WordError(f"unknown letter {token[pos]!r}")
            letters, exp = m.group(1), m.group(2)
            if exp is not None:
                k = int(exp)
                if k <= 0:
                    raise WordError(f"non-positive exponent {k}")
                # the exponent binds to the last letter only, as in r^3
                out.append(letters[:-1] + letters[-1] * k)
            else:
                out.append(letters)
            pos = m.end()
    return "".join(out)


def complement(x: str) -> str:
    return x.translate(_COMPLEMENT)


def reverse(x: str) -> str:
    return x[::-1]


def backtrack(x: str) -> str:
    """The same path traversed in the opposite direction."""
    return x[::-1].translate(_COMPLEMENT)


def has_period(x: str, p: int) -> bool:
    """True iff ``x[i] == x[i + p]`` for every valid ``i``."""
    if not 1 <= p <= len(x):
        raise ValueError(f"period {p} out of range 1..{len(x)}")
    return x[p:] == x[: len(x) - p]


def vertex_path(word: str, origin: Cell = (0, 0)) -> list[Cell]:
    x, y = origin
    path = [(x, y)]
    for ch in word:
        dx, dy = STEP[ch]
        x += dx
        y += dy
        path.append((x, y))
    return path


def signed_area(word: str) -> int:
    """Enclosed area of a closed word; positive for clockwise traversal."""
    twice = 0
    x = y = 0
    for ch in word:
        dx, dy = STEP[ch]
        nx, ny = x + dx, y + dy
        twice += x * ny - nx * y
        x, y = nx, ny
    if x or y:
        raise WordError("word is not closed")
    return -twice // 2


@dataclass(frozen=True)
class Factor:
    """A circular factor: 1-based ``start`` and ``length`` (possibly 0)."""

    start: int
    length: int

    def end(self, n: int) -> int:
        """1-based position of the last letter (the letter before ``start`` when empty)."""
        return (self.start + self.length - 2) % n + 1


@dataclass(frozen=True)
class BoundaryWord:
    """Clockwise boundary word of a polyomino, starting at its canonical vertex.

    Use :func:`validate` or :func:`boundary_of_cells` to build one.
    """

    word: str
    path: tuple[Cell, ...] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def half(self) -> int:
        return len(self.word) // 2

    def _index(self, i: int) -> int:
        if i == 0:
            raise IndexError("circular index 0 is undefined")
        n = len(self.word)
        return (i - 1) % n if i > 0 else (i % n)

    def __getitem__(self, i: int) -> str:
        return self.word[self._index(i)]

    def factor(self, i: int, j: int) -> str:
        """Circular factor ``W[i..j]``, wrapping when ``j`` precedes ``i``."""
        a, b = self._index(i), self._index(j)
        if a <= b:
            return self.word[a : b + 1]
        return self.word[a:] + self.word[: b + 1]

    def text(self, f: Factor) -> str:
        n = len(self.word)
        a = (f.start - 1) % n
        doubled = self.word + self.word
        return doubled[a : a + f.length]

    def vertex(self, i: int) -> Cell:
        """Vertex ``p(i)`` where letter ``i`` starts; indices are taken modulo ``|W|``."""
        return self.path[(i - 1) % len(self.word)]


def _canonical_start(path: list[Cell]) -> int:
    # leftmost boundary vertex, lowest among those
    best = min(range(len(path)), key=lambda k: (path[k][0], path[k][1]))
    return best


def validate(word: str) -> BoundaryWord:
    """Check that ``word`` traces a simple closed curve and normalize it.

    Counterclockwise words are replaced by their backtrack.  The result starts
    at the leftmost (then lowest) vertex, whose outgoing clockwise edge is
    always ``u``; that vertex is placed at the origin.
    """
    word = word.lower()
    if not word:
        raise WordError("empty word")
    bad = set(word) - set(LETTERS)
    if bad:
        raise WordError(f"unknown letter {sorted(bad)[0]!r}")
    if word.count("u") != word.count("d") or word.count("l") != word.count("r"):
        raise WordError("not closed: letter counts do not balance")
    path = vertex_path(word)
    if len(set(path[:-1])) != len(word):
        raise WordError("not simple: the boundary revisits a vertex")
    if signed_area(word) < 0:
        word = backtrack(word)
        path = vertex_path(word)
    k = _canonical_start(path[:-1])
    word = word[k:] + word[:k]
    # the canonical start vertex is placed at the origin
    return BoundaryWord(word, tuple(vertex_path(word)[:-1]))


def _neighbors(c: Cell) -> Iterable[Cell]:
    x, y = c
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


def is_connected(cells: frozenset[Cell] | set[Cell]) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for nb in _neighbors(c):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def has_hole(cells: frozenset[Cell] | set[Cell]) -> bool:
    """Flood-fill the complement inside the bounding box inflated by one."""
    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    total = (x1 - x0 + 1) * (y1 - y0 + 1) - len(cells)
    seen = {(x0, y0)}
    todo = deque(seen)
    while todo:
        c = todo.popleft()
        for nb in _neighbors(c):
            x, y = nb
            if x0 <= x <= x1 and y0 <= y <= y1 and nb not in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) != total


def boundary_of_cells(cells: Iterable[Cell]) -> BoundaryWord:
    """Clockwise boundary word of a simply connected set of cells."""
    cells = frozenset(cells)
    if not cells:
        raise WordError("empty cell set")
    if not is_connected(cells):
        raise WordError("cells are not edge-connected")
    if has_hole(cells):
        raise WordError("cell set has a hole")
    # clockwise edges keep the interior on the right
    out: dict[Cell, tuple[str, Cell]] = {}
    for x, y in cells:
        if (x - 1, y) not in cells:
            out[(x, y)] = ("u", (x, y + 1))
        if (x, y + 1) not in cells:
            out[(x, y + 1)] = ("r", (x + 1, y + 1))
        if (x + 1, y) not in cells:
            out[(x + 1, y + 1)] = ("d", (x + 1, y))
        if (x, y - 1) not in cells:
            out[(x + 1, y)] = ("l", (x, y))
    start = min(out)
    letters = []
    path = []
    v = start
    while True:
        path.append(v)
        ch, v = out[v]
        letters.append(ch)
        if v == start:
            break
    if len(letters) != len(out):
        raise WordError("boundary is not a single closed curve")
    return BoundaryWord("".join(letters), tuple(path))


def cells_of_boundary(w: BoundaryWord | str) -> frozenset[Cell]:
    """Cells enclosed by a boundary word, positioned by its vertex path."""
    if isinstance(w, str):
        w = validate(w)
    rows: dict[int, list[int]] = {}
    for k, ch in enumerate(w.word):
        x, y = w.path[k]
        if ch == "u":
            rows.setdefault(y, []).append(x)
        elif ch == "d":
            rows.setdefault(y - 1, []).append(x)
    cells = set()
    for y, xs in rows.items():
        xs.sort()
        for a, b in zip(xs[::2], xs[1::2]):
            cells.update((x, y) for x in range(a, b))
    return frozenset(cells)


def normalize_cells(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Translate cells so the minimum x and minimum y are both 0."""
    cells = list(cells)
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return frozenset((x - mx, y - my) for x, y in cells)


def parse_cells(text: str) -> frozenset[Cell]:
    """Parse a cell list: one ``x y`` pair per line, ``#`` starts a comment."""
    cells = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise WordError(f"line {lineno}: expected 'x y', got {line!r}")
        cells.add((int(parts[0]), int(parts[1])))
    return frozenset(cells)
