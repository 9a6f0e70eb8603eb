"""Seifert matrices, knot expressions, and shaken-form witnesses."""

from .matrices import (
    EMPTY,
    KNOT,
    LINK,
    SeifertMatrix,
    alexander_poly,
    connected_sum,
    is_alexander_trivial,
    mirror,
    pencil_det,
    shaking_matrix,
    torus_seifert,
    twist_seifert,
)
from .sympl import SympBasisChange, symplectic_normalize
from .witness import GenusWitness, shake1_genus_witness
from .expr import (
    Cable,
    KnotExpr,
    Matrix,
    Mirror,
    Sum,
    Torus,
    Twist,
    Unknot,
    seifert_matrix_of,
)

__all__ = [
    "SeifertMatrix",
    "EMPTY",
    "KNOT",
    "LINK",
    "torus_seifert",
    "twist_seifert",
    "mirror",
    "connected_sum",
    "shaking_matrix",
    "pencil_det",
    "is_alexander_trivial",
    "alexander_poly",
    "SympBasisChange",
    "symplectic_normalize",
    "GenusWitness",
    "shake1_genus_witness",
    "KnotExpr",
    "Unknot",
    "Torus",
    "Twist",
    "Matrix",
    "Mirror",
    "Sum",
    "Cable",
    "seifert_matrix_of",
]
