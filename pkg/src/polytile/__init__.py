"""Translational tilings of the plane by a single polyomino.

A polyomino tiles the plane by translations exactly when its boundary word
splits as ``A B C Â B̂ Ĉ``.  This package finds every such split in time
linear in the boundary length, turns each one into a lattice tiling, and
checks the fast paths against brute force on small polyominoes.
"""

from .admissible import AdmissibleFactor, AdmissibleTable, Center, all_admissible, is_mirror
from .factorization import (
    BnFactorization,
    canonicalize,
    count_factorizations,
    count_tilings,
    enumerate_factorizations,
    from_texts,
    is_tileable,
)
from .lce import LceIndex
from .tiling import TilingLattice, TilingPatch, lattice_of, patch, render_svg, translation_vectors, verify_patch
from .words import (
    BoundaryWord,
    Factor,
    WordError,
    backtrack,
    boundary_of_cells,
    cells_of_boundary,
    complement,
    has_period,
    parse_word,
    reverse,
    signed_area,
    validate,
)

__all__ = [
    "AdmissibleFactor",
    "AdmissibleTable",
    "BnFactorization",
    "BoundaryWord",
    "Center",
    "Factor",
    "LceIndex",
    "TilingLattice",
    "TilingPatch",
    "WordError",
    "all_admissible",
    "backtrack",
    "boundary_of_cells",
    "canonicalize",
    "cells_of_boundary",
    "complement",
    "count_factorizations",
    "count_tilings",
    "enumerate_factorizations",
    "from_texts",
    "has_period",
    "is_mirror",
    "is_tileable",
    "lattice_of",
    "parse_word",
    "patch",
    "render_svg",
    "reverse",
    "signed_area",
    "translation_vectors",
    "validate",
    "verify_patch",
]
