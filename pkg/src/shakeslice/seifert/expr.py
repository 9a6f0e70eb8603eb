"""Knot expression trees.

Nodes mirror the expression language: the unknot, torus knots, twist knots,
explicit Seifert matrices, mirrors, connected sums, and cables.  Semantic
constraints (coprimality, cable parameters) are enforced at construction,
so a built tree is always meaningful.  text() prints the canonical form,
which the parser maps back to an equal tree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .matrices import (
    EMPTY,
    KNOT,
    SeifertMatrix,
    connected_sum,
    mirror as mirror_matrix,
    torus_seifert,
    twist_seifert,
)


class KnotExpr:
    """Base class; use the concrete node types."""

    def text(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class Unknot(KnotExpr):
    def text(self) -> str:
        return "U"


@dataclass(frozen=True)
class Torus(KnotExpr):
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("torus parameters must be at least 2")
        if gcd(self.p, self.q) != 1:
            raise ValueError("torus parameters not coprime: this is a link")

    def text(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class Twist(KnotExpr):
    m: int

    def text(self) -> str:
        return f"twist({self.m})"


@dataclass(frozen=True)
class Matrix(KnotExpr):
    matrix: SeifertMatrix

    def __post_init__(self):
        if self.matrix.kind != KNOT:
            raise ValueError("expression matrices must be knot kind")

    def text(self) -> str:
        return "seifert(" + json.dumps(
            [list(r) for r in self.matrix.entries], separators=(",", ",")
        ) + ")"


@dataclass(frozen=True)
class Mirror(KnotExpr):
    inner: KnotExpr

    def text(self) -> str:
        return f"mirror({self.inner.text()})"


@dataclass(frozen=True)
class Sum(KnotExpr):
    parts: tuple[KnotExpr, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("connected sum needs at least one part")
        object.__setattr__(self, "parts", tuple(self.parts))

    def text(self) -> str:
        return "sum(" + ",".join(p.text() for p in self.parts) + ")"


@dataclass(frozen=True)
class Cable(KnotExpr):
    m: int
    r: int
    inner: KnotExpr

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("cable winding must be at least 1")
        if gcd(self.m, self.r) != 1:
            raise ValueError("cable parameters must be coprime")

    def text(self) -> str:
        return f"cable({self.m},{self.r};{self.inner.text()})"


def seifert_matrix_of(expr: KnotExpr) -> SeifertMatrix | None:
    """A Seifert matrix for the expression, or None when only the satellite
    formulas apply (any cable below the root blocks a matrix model)."""
    if isinstance(expr, Unknot):
        return EMPTY
    if isinstance(expr, Torus):
        return torus_seifert(expr.p, expr.q)
    if isinstance(expr, Twist):
        return twist_seifert(expr.m)
    if isinstance(expr, Matrix):
        return expr.matrix
    if isinstance(expr, Mirror):
        inner = seifert_matrix_of(expr.inner)
        return None if inner is None else mirror_matrix(inner)
    if isinstance(expr, Sum):
        mats = [seifert_matrix_of(p) for p in expr.parts]
        if any(m is None for m in mats):
            return None
        return connected_sum(*mats)
    if isinstance(expr, Cable):
        return None
    raise TypeError(f"not a knot expression: {expr!r}")


__all__ = [
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
