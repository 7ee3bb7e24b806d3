from fractions import Fraction
from xml.etree import ElementTree

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from polytile.factorization import BnFactorization, canonicalize, enumerate_factorizations, from_texts
from polytile.tiling import (
    DegenerateLattice,
    hermite_basis,
    lattice_of,
    make_patch,
    patch,
    render_svg,
    translation_vectors,
    verify_patch,
)
from polytile.words import cells_of_boundary, validate

SVG = "{http://www.w3.org/2000/svg}"


def factorization(word, a, b, c):
    w = validate(word)
    return w, from_texts(w, a, b, c)[0]


def in_lattice(p, u, v):
    det = u[0] * v[1] - u[1] * v[0]
    i = Fraction(p[0] * v[1] - p[1] * v[0], det)
    j = Fraction(u[0] * p[1] - u[1] * p[0], det)
    return i.denominator == 1 and j.denominator == 1


class TestVectors:
    def test_square(self):
        w, f = factorization("urdl", "u", "r", "")
        assert translation_vectors(w, f) == ((-1, 0), (0, 1), (1, 1))

    def test_domino_stacked(self):
        w, f = factorization("urrdll", "u", "rr", "")
        ta, tb, _ = translation_vectors(w, f)
        assert (ta, tb) == ((-2, 0), (0, 1))
        assert lattice_of(w, f).hnf == ((2, 0), (0, 1))

    def test_domino_brick(self):
        w, f = factorization("urrdll", "u", "r", "r")
        ta, tb, tc = translation_vectors(w, f)
        assert (ta, tb, tc) == ((-2, 0), (-1, 1), (1, 1))
        assert lattice_of(w, f).hnf == ((2, 0), (1, 1))

    def test_square_lattice(self):
        w, f = factorization("urdl", "u", "r", "")
        assert lattice_of(w, f).hnf == ((1, 0), (0, 1))

    def test_segments_glue(self, corpus6):
        for w in corpus6:
            for f in enumerate_factorizations(w):
                vecs = translation_vectors(w, f)
                assert vecs[0][0] - vecs[1][0] + vecs[2][0] == 0
                assert vecs[0][1] - vecs[1][1] + vecs[2][1] == 0
                for k in range(3):
                    x, xhat, t = f.factors[k], f.factors[k + 3], vecs[k]
                    if not x.length:
                        continue
                    s = w.vertex(xhat.start)
                    e = w.vertex(xhat.start + xhat.length)
                    assert (s[0] + t[0], s[1] + t[1]) == w.vertex(x.start + x.length)
                    assert (e[0] + t[0], e[1] + t[1]) == w.vertex(x.start)


class TestHermite:
    vec = st.tuples(st.integers(-30, 30), st.integers(-30, 30))

    @given(vec, vec)
    def test_same_lattice(self, u, v):
        det = u[0] * v[1] - u[1] * v[0]
        assume(det != 0)
        (d1, zero), (s, d2) = basis = hermite_basis(u, v)
        assert zero == 0 and d1 > 0 and d2 > 0 and 0 <= s < d1
        assert d1 * d2 == abs(det)
        for p in basis:
            assert in_lattice(p, u, v)
        for p in (u, v):
            assert in_lattice(p, *basis)

    @given(vec, vec, st.integers(-3, 3), st.integers(-3, 3))
    def test_basis_change_invariance(self, u, v, a, b):
        assume(u[0] * v[1] - u[1] * v[0] != 0)
        # (u, v) -> (u + a v, v) and (u, v + b u) are unimodular
        u2 = (u[0] + a * v[0], u[1] + a * v[1])
        v2 = (v[0] + b * u2[0], v[1] + b * u2[1])
        assert hermite_basis(u, v) == hermite_basis(v2, u2)

    def test_degenerate(self):
        with pytest.raises(DegenerateLattice):
            hermite_basis((1, 2), (2, 4))


class TestPatch:
    def test_radius_zero(self):
        w, f = factorization("urrdll", "u", "r", "r")
        p = patch(w, f, 0)
        assert p.translates == [(0, 0)]
        assert verify_patch(w, p)

    def test_square_block(self):
        w, f = factorization("urdl", "u", "r", "")
        p = patch(w, f, 1)
        covered = {(x + v[0], y + v[1]) for v in p.translates for x, y in cells_of_boundary(w)}
        assert len(p.translates) == 9
        xs = sorted({x for x, _ in covered})
        ys = sorted({y for _, y in covered})
        assert len(xs) == len(ys) == 3
        assert covered == {(x, y) for x in xs for y in ys}

    def test_brick(self):
        w, f = factorization("urrdll", "u", "r", "r")
        p = patch(w, f, 1)
        assert len(p.translates) == 9
        assert verify_patch(w, p)

    def test_negative_radius(self):
        w, f = factorization("urdl", "u", "r", "")
        with pytest.raises(ValueError):
            patch(w, f, -1)

    def test_corrupted_square(self):
        w = validate("urdl")
        assert not verify_patch(w, make_patch((-1, 0), (0, 2), 1))
        assert verify_patch(w, make_patch((-1, 0), (0, 1), 1))

    def test_overlap_detected(self):
        w = validate("urrdll")
        assert not verify_patch(w, make_patch((1, 0), (0, 1), 1))

    def test_forged_splits_rejected(self):
        w = validate("uurdrurddlll")
        n = len(w)
        forged = 0
        for start in range(1, n + 1):
            for la in range(n // 2 + 1):
                for lb in range(n // 2 + 1 - la):
                    lc = n // 2 - la - lb
                    if sorted((la, lb, lc))[1] == 0:
                        continue
                    f = canonicalize(n, start, la, lb, lc)
                    forged += 1
                    assert not verify_patch(w, patch(w, f, 1)), f
        assert forged > 100

    def test_corpus_radius_one(self, corpus6):
        for w in corpus6:
            for f in enumerate_factorizations(w):
                assert verify_patch(w, patch(w, f, 1))


class TestSvg:
    def paths(self, doc):
        root = ElementTree.fromstring(doc)
        return root.findall(f"{SVG}path")

    def test_square(self):
        w, f = factorization("urdl", "u", "r", "")
        assert len(self.paths(render_svg(w, patch(w, f, 1)))) == 9

    def test_brick_radius_two(self):
        w, f = factorization("urrdll", "u", "r", "r")
        doc = render_svg(w, patch(w, f, 2))
        paths = self.paths(doc)
        assert len(paths) == 25
        # the central copy is drawn last with the highlight stroke
        assert paths[-1].get("stroke") == "#d62728"
        assert sum(p.get("stroke") == "#d62728" for p in paths) == 1

    def test_deterministic(self):
        w, f = factorization("ururdrdlll", "l", "lu", "ru")
        assert render_svg(w, patch(w, f, 2)) == render_svg(w, patch(w, f, 2))

    def test_fill_cycles_palette(self):
        w, f = factorization("urdl", "u", "r", "")
        fills = [p.get("fill") for p in self.paths(render_svg(w, patch(w, f, 1), palette=("#000", "#fff")))]
        assert set(fills) == {"#000", "#fff"}

    def test_source_kept(self):
        w, f = factorization("urdl", "u", "r", "")
        assert isinstance(patch(w, f, 1).source, BnFactorization)
