"""Seifert matrices: validated construction, standard families, sums,
mirrors, shaken extensions, and the Alexander pencil determinant.

The pencil determinant det(t*V - V^T) is computed without polynomial
arithmetic: substitute t = 2^L for L past the coefficient magnitude bound,
take one integer Bareiss determinant (banded when the matrix is banded), and
read the coefficients back as balanced base-2^L digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .._kernels import bareiss_det
from ..polyalg.cyclo import delta_one_normalized
from ..polyalg.laurent import ONE, LaurentPoly

KNOT = "knot"
LINK = "link"


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix.

    kind "knot" requires det(V - V^T) == 1, the unimodular intersection
    pairing of a genus-(size/2) surface with one boundary circle; kind
    "link" carries no such promise (shaken matrices live there).
    """

    entries: tuple[tuple[int, ...], ...]
    kind: str = KNOT

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)
        if self.kind not in (KNOT, LINK):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == KNOT:
            m = len(rows)
            skew = [[rows[i][j] - rows[j][i] for j in range(m)] for i in range(m)]
            if bareiss_det(skew) != 1:
                raise ValueError("knot Seifert matrix needs det(V - V^T) == 1")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        return f"SeifertMatrix({self.kind}, {list(map(list, self.entries))})"


EMPTY = SeifertMatrix((), KNOT)


def torus_seifert(p: int, q: int) -> SeifertMatrix:
    """Seifert matrix of the (p, q) torus knot from its fiber surface.

    Basis loops x[i][r] (i = 1..p-1 strand pairs, r = 0..q-2 consecutive
    band pairs) are ordered by start position (i-1) + (p-1)*r along the
    braid word; the matrix is banded with bandwidth p-1.

    >>> torus_seifert(2, 3).entries
    ((-1, 1), (0, -1))
    """
    p, q = int(p), int(q)
    if p < 2 or q < 2:
        raise ValueError("torus parameters must be at least 2")
    if gcd(p, q) != 1:
        raise ValueError("torus link, not a knot")
    m = (p - 1) * (q - 1)

    def idx(i, r):
        return (i - 1) + (p - 1) * r

    v = [[0] * m for _ in range(m)]
    for i in range(1, p):
        for r in range(q - 1):
            a = idx(i, r)
            v[a][a] = -1
            if r + 1 <= q - 2:
                v[a][idx(i, r + 1)] = 1
            if i + 1 <= p - 1:
                v[a][idx(i + 1, r)] = 1
                if r - 1 >= 0:
                    v[a][idx(i + 1, r - 1)] = -1
    return SeifertMatrix(tuple(tuple(r) for r in v), KNOT)


def twist_seifert(m: int) -> SeifertMatrix:
    """Genus-one twist knot matrix [[-1, 1], [0, m]].

    m = -1 is the trefoil, m = 1 the figure-eight, m = -2 the knot 5_2.
    """
    return SeifertMatrix(((-1, 1), (0, int(m))), KNOT)


def mirror(v: SeifertMatrix) -> SeifertMatrix:
    """Mirror image: -V^T, same kind."""
    m = v.size
    ent = tuple(tuple(-v.entries[j][i] for j in range(m)) for i in range(m))
    return SeifertMatrix(ent, v.kind)


def connected_sum(*parts: SeifertMatrix) -> SeifertMatrix:
    """Block sum of knot Seifert matrices; rejects link-kind input."""
    for part in parts:
        if part.kind != KNOT:
            raise ValueError("connected sum is defined for knot matrices only")
    total = sum(p.size for p in parts)
    out = [[0] * total for _ in range(total)]
    at = 0
    for part in parts:
        for i, row in enumerate(part.entries):
            for j, x in enumerate(row):
                out[at + i][at + j] = x
        at += part.size
    return SeifertMatrix(tuple(tuple(r) for r in out), KNOT)


def shaking_matrix(v: SeifertMatrix, k: int, n: int) -> SeifertMatrix:
    """V extended by k shake blocks [[0, Id_n], [Z_n, 0]], kind "link".

    Z_n is the reversed identity; for n = 1 each block is [[0, 1], [1, 0]].

    >>> shaking_matrix(twist_seifert(-1), 1, 1).entries[2:]
    ((0, 0, 0, 1), (0, 0, 1, 0))
    """
    k, n = int(k), int(n)
    if k < 0:
        raise ValueError("number of shake blocks must be nonnegative")
    if n < 1:
        raise ValueError("shake block size must be at least 1")
    m = v.size
    total = m + 2 * n * k
    out = [[0] * total for _ in range(total)]
    for i, row in enumerate(v.entries):
        for j, x in enumerate(row):
            out[i][j] = x
    for b in range(k):
        base = m + 2 * n * b
        for i in range(n):
            out[base + i][base + n + i] = 1          # top right: Id_n
            out[base + n + i][base + (n - 1 - i)] = 1  # bottom left: Z_n
    return SeifertMatrix(tuple(tuple(r) for r in out), LINK)


def _bandwidth(rows) -> int:
    b = 0
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x and abs(i - j) > b:
                b = abs(i - j)
    return b


def pencil_det(v: SeifertMatrix) -> LaurentPoly:
    """det(t*V - V^T) for any kind, as an ordinary polynomial in t."""
    m = v.size
    if m == 0:
        return ONE
    rows = v.entries
    bound = 1
    for i in range(m):
        s = sum(abs(rows[i][j]) + abs(rows[j][i]) for j in range(m))
        bound *= max(1, s)
    width = bound.bit_length() + 2
    pencil = [
        [(rows[i][j] << width) - rows[j][i] for j in range(m)]
        for i in range(m)
    ]
    det = int(bareiss_det(pencil, band=_bandwidth(rows)))
    full = 1 << width
    half = 1 << (width - 1)
    coeffs = []
    for _ in range(m + 1):
        r = det & (full - 1)
        if r >= half:
            r -= full
        coeffs.append(r)
        det = (det - r) >> width
    if det:
        raise AssertionError("pencil coefficient extraction left a remainder")
    return LaurentPoly(0, tuple(coeffs))


def is_alexander_trivial(v: SeifertMatrix) -> bool:
    """Whether det(t*V - V^T) is a unit +-t^j; true for the empty matrix.

    >>> is_alexander_trivial(SeifertMatrix(((0, 1), (0, 0)), LINK))
    True
    >>> is_alexander_trivial(twist_seifert(-1))
    False
    """
    p = pencil_det(v)
    return p.coeffs in ((1,), (-1,))


def alexander_poly(v: SeifertMatrix) -> LaurentPoly:
    """Alexander polynomial det(t*V - V^T), normalized so that the result
    is symmetric under t -> 1/t and takes value 1 at t = 1."""
    if v.kind != KNOT:
        raise ValueError("Alexander polynomial needs a knot Seifert matrix")
    return delta_one_normalized(pencil_det(v))


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
]
