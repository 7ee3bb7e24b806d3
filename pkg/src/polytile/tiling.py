"""Regular tilings induced by BN factorizations.

Each non-empty factor ``X`` of a factorization pairs with ``X̂``: the copy
of the polyomino translated by ``tX`` glues its ``X̂`` segment onto ``X``.
The translates ``i*tA + j*tB`` form the tiling lattice.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

from .words import BoundaryWord, cells_of_boundary

if TYPE_CHECKING:
    from .factorization import BnFactorization

Vec2 = tuple[int, int]

PALETTE = ("#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462")


class DegenerateLattice(ArithmeticError):
    pass


@dataclass(frozen=True)
class TilingLattice:
    tA: Vec2
    tB: Vec2
    tC: Vec2
    hnf: tuple[Vec2, Vec2]

    @property
    def det(self) -> int:
        return self.tA[0] * self.tB[1] - self.tA[1] * self.tB[0]


@dataclass(frozen=True)
class TilingPatch:
    tA: Vec2
    tB: Vec2
    radius: int
    coeffs: tuple[tuple[int, int], ...]
    source: "BnFactorization | None" = field(default=None, compare=False)

    @property
    def translates(self) -> list[Vec2]:
        return [_combine(self.tA, self.tB, i, j) for i, j in self.coeffs]


def _sub(p: Vec2, q: Vec2) -> Vec2:
    return (p[0] - q[0], p[1] - q[1])


def _combine(a: Vec2, b: Vec2, i: int, j: int) -> Vec2:
    return (i * a[0] + j * b[0], i * a[1] + j * b[1])


def translation_vectors(w: BoundaryWord, f: BnFactorization) -> tuple[Vec2, Vec2, Vec2]:
    """``tX = end(X) - start(X̂)`` for each non-empty ``X``; an empty one closes ``tA - tB + tC = 0``."""
    fac = f.factors
    vec: list[Vec2 | None] = []
    for k in range(3):
        x, xhat = fac[k], fac[k + 3]
        if x.length == 0:
            vec.append(None)
        else:
            vec.append(_sub(w.vertex(x.start + x.length), w.vertex(xhat.start)))
    ta, tb, tc = vec
    if ta is None:
        ta = _sub(tb, tc)
    elif tb is None:
        tb = (ta[0] + tc[0], ta[1] + tc[1])
    elif tc is None:
        tc = _sub(tb, ta)
    return ta, tb, tc


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hermite_basis(u: Vec2, v: Vec2) -> tuple[Vec2, Vec2]:
    """Unique basis ``((d1, 0), (s, d2))`` with ``d1, d2 > 0`` and ``0 <= s < d1``."""
    det = u[0] * v[1] - u[1] * v[0]
    if det == 0:
        raise DegenerateLattice(f"{u} and {v} are linearly dependent")
    d2, a, b = _xgcd(u[1], v[1])
    d1 = abs(det) // d2
    s = (a * u[0] + b * v[0]) % d1
    return (d1, 0), (s, d2)


def lattice_of(w: BoundaryWord, f: BnFactorization) -> TilingLattice:
    ta, tb, tc = translation_vectors(w, f)
    return TilingLattice(ta, tb, tc, hermite_basis(ta, tb))


def patch(w: BoundaryWord, f: BnFactorization, radius: int) -> TilingPatch:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    ta, tb, _ = translation_vectors(w, f)
    return make_patch(ta, tb, radius, f)


def make_patch(ta: Vec2, tb: Vec2, radius: int, source=None) -> TilingPatch:
    coeffs = tuple((i, j) for j in range(-radius, radius + 1) for i in range(-radius, radius + 1))
    return TilingPatch(ta, tb, radius, coeffs, source)


def verify_patch(w: BoundaryWord, p: TilingPatch) -> bool:
    """Check a finite patch against the tiling conditions.

    The copies must be pairwise disjoint.  A cell counts as interior-safe when
    every lattice translate that could cover it belongs to the patch; those
    cells must be covered.  For radius >= 1 every cell touching the central
    copy must be covered as well.
    """
    cells = cells_of_boundary(w)
    cover = Counter()
    for v in p.translates:
        cover.update((x + v[0], y + v[1]) for x, y in cells)
    if any(k > 1 for k in cover.values()):
        return False
    if p.radius == 0:
        return True
    ta, tb = p.tA, p.tB
    det = ta[0] * tb[1] - ta[1] * tb[0]
    if det == 0:
        return False

    xs = [x for x, _ in cells]
    ys = [y for _, y in cells]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    box = [(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]
    # coefficients of any lattice vector no longer than the box diagonal
    span = (x1 - x0 + 1) + (y1 - y0 + 1)
    reach = math.ceil(span * (abs(ta[0]) + abs(ta[1]) + abs(tb[0]) + abs(tb[1])) / abs(det)) + 1

    r = p.radius
    window = set()
    for v in p.translates:
        window.update((x + v[0], y + v[1]) for x, y in box)
    unsafe = set()
    for i in range(-r - reach, r + reach + 1):
        for j in range(-r - reach, r + reach + 1):
            if abs(i) <= r and abs(j) <= r:
                continue
            v = _combine(ta, tb, i, j)
            unsafe.update((x + v[0], y + v[1]) for x, y in box)
    if any(c not in cover for c in window - unsafe):
        return False

    for x, y in cells:
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb not in cells and nb not in cover:
                return False
    return True


def render_svg(
    w: BoundaryWord,
    p: TilingPatch,
    *,
    scale: int = 20,
    palette: Sequence[str] = PALETTE,
    margin: int = 1,
) -> bytes:
    """SVG drawing of a patch: one closed path per copy, the central copy outlined."""
    pts = []
    paths = []
    for (i, j), v in zip(p.coeffs, p.translates):
        verts = [(x + v[0], y + v[1]) for x, y in w.path]
        pts.extend(verts)
        d = "M{} {}".format(verts[0][0] * scale, -verts[0][1] * scale)
        d += "".join(
            "L{} {}".format(x * scale, -y * scale) for x, y in verts[1:]
        )
        d += "Z"
        fill = palette[(i + j) % len(palette)]
        if i == 0 and j == 0:
            style = f'fill="{fill}" stroke="#d62728" stroke-width="{max(scale // 6, 2)}"'
        else:
            style = f'fill="{fill}" stroke="#333333" stroke-width="1"'
        paths.append(f'<path d="{d}" {style}/>')
    xmin = (min(x for x, _ in pts) - margin) * scale
    xmax = (max(x for x, _ in pts) + margin) * scale
    ymin = (-max(y for _, y in pts) - margin) * scale
    ymax = (-min(y for _, y in pts) + margin) * scale
    width, height = xmax - xmin, ymax - ymin
    # central copy last so its outline is on top
    centre = p.coeffs.index((0, 0))
    paths.append(paths.pop(centre))
    doc = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{xmin} {ymin} {width} {height}">',
        f"<title>{w.word}</title>",
        *paths,
        "</svg>",
        "",
    ]
    return "\n".join(doc).encode("utf-8")
