"""Exact polynomial and cyclotomic linear algebra."""

from .laurent import ONE, T, ZERO, LaurentPoly, monomial, t_power_minus_one
from .resultant import resultant
from .cyclo import (
    CycloElement,
    RootOfUnity,
    cyclotomic_polynomial,
    delta_one_normalized,
    euler_phi,
    eval_at_root,
)
from .hermitian import HermitianMatrix, hermitian_signature

__all__ = [
    "LaurentPoly",
    "monomial",
    "t_power_minus_one",
    "ZERO",
    "ONE",
    "T",
    "resultant",
    "RootOfUnity",
    "CycloElement",
    "cyclotomic_polynomial",
    "delta_one_normalized",
    "euler_phi",
    "eval_at_root",
    "HermitianMatrix",
    "hermitian_signature",
]
