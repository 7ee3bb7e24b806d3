"""Named families of boundary words used for examples and benchmarks."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .words import BoundaryWord, WordError, backtrack, boundary_of_cells, validate

FAMILIES = ("bar", "staircase", "rectangle", "random-tileable", "fig2")

FIG2 = "ururdrurdddluldlul"

# quarter turn clockwise; preserves orientation
_TURN = str.maketrans("urdl", "rdlu")


@dataclass(frozen=True)
class Generated:
    word: str
    witness: tuple[str, str, str] | None = None


def bar(i: int) -> str:
    """``u r^i d l^i``: a 1 x i bar with ``i`` regular tilings."""
    if i < 1:
        raise ValueError("bar length must be positive")
    return "u" + "r" * i + "d" + "l" * i


def rectangle(a: int, b: int) -> str:
    """``a`` cells wide, ``b`` cells tall."""
    if a < 1 or b < 1:
        raise ValueError("rectangle sides must be positive")
    return "u" * b + "r" * a + "d" * b + "l" * a


def staircase(k: int) -> str:
    """``k`` horizontal dominoes, each one cell right of and above the last."""
    if k < 1:
        raise ValueError("staircase needs at least one step")
    cells = {(i + dx, i) for i in range(k) for dx in (0, 1)}
    return boundary_of_cells(cells).word


def _monotone(rng: random.Random, length: int, letters: str) -> str:
    return "".join(rng.choice(letters) for _ in range(length))


def random_tileable(rng: random.Random, half: int) -> Generated:
    """A random word ``A B C Â B̂ Ĉ`` with ``|A| + |B| + |C| = half``.

    ``A`` climbs (u/r), ``B`` runs right and ``C`` descends (r/d), which
    makes the outline an x-monotone hexagon; candidates that are not simple
    are drawn again.  A random quarter turn is applied at the end.
    """
    if half < 3:
        raise ValueError("half length must be at least 3")
    while True:
        la = rng.randint(1, half - 2)
        lb = rng.randint(1, half - la - 1)
        lc = half - la - lb
        a = "u" + _monotone(rng, la - 1, "ur")
        b = "r" * lb
        c = _monotone(rng, lc - 1, "rd") + "d"
        turns = rng.randrange(4)
        for _ in range(turns):
            a, b, c = (x.translate(_TURN) for x in (a, b, c))
        raw = a + b + c + backtrack(a) + backtrack(b) + backtrack(c)
        try:
            validate(raw)
        except WordError:
            continue
        return Generated(raw, (a, b, c))


def generate(family: str, param: str | None = None, seed: int | None = None) -> Generated:
    """Word of ``family``; ``param`` is ``i`` for bar/staircase, ``AxB`` for rectangle, half length for random-tileable."""
    if family == "bar":
        return Generated(bar(_int(param, 1)))
    if family == "staircase":
        return Generated(staircase(_int(param, 2)))
    if family == "rectangle":
        m = re.fullmatch(r"(\d+)[x*](\d+)", param or "")
        if not m:
            raise ValueError("rectangle parameter must look like AxB")
        return Generated(rectangle(int(m.group(1)), int(m.group(2))))
    if family == "random-tileable":
        return random_tileable(random.Random(seed), _int(param, 12))
    if family == "fig2":
        return Generated(FIG2, ("u", "ru", "rdrurd"))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _int(param: str | None, default: int) -> int:
    if param is None:
        return default
    try:
        return int(param)
    except ValueError:
        raise ValueError(f"expected an integer parameter, got {param!r}") from None


def bar_of_length(n: int) -> BoundaryWord:
    """The bar word with exactly ``n`` letters (``n`` even, at least 4)."""
    if n < 4 or n % 2:
        raise ValueError("bar words have even length >= 4")
    return validate(bar(n // 2 - 1))
