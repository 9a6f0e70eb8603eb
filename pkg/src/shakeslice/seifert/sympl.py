"""Symplectic basis normalization for the intersection pairing V - V^T.

The reduction is a deterministic integer congruence: Euclid on the first
unfinished row brings a +-1 into the superdiagonal slot (lowest index wins
all ties), the sign is fixed, the two finished rows are cleared, and the
process recurses on the trailing block.  The accumulated U satisfies
U^T (V - V^T) U = direct sum of [[0, 1], [-1, 0]] blocks, interleaved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .._kernels import bareiss_det
from ._mat import identity
from .matrices import SeifertMatrix


@dataclass(frozen=True)
class SympBasisChange:
    """Result of a symplectic normalization.

    U is the unimodular column-operation matrix; moves logs the elementary
    congruences applied, in order: ("swap", i, j), ("negate", i), and
    ("add", i, j, c) meaning column i += c * column j (rows likewise).
    """

    U: tuple[tuple[int, ...], ...]
    moves: tuple[tuple, ...]

    @property
    def pairs(self) -> int:
        return len(self.U) // 2


def _col_swap(mat, u, moves, i, j):
    if i == j:
        return
    for row in mat:
        row[i], row[j] = row[j], row[i]
    mat[i], mat[j] = mat[j], mat[i]
    for row in u:
        row[i], row[j] = row[j], row[i]
    moves.append(("swap", i, j))


def _col_negate(mat, u, moves, i):
    for row in mat:
        row[i] = -row[i]
    mat[i] = [-x for x in mat[i]]
    for row in u:
        row[i] = -row[i]
    moves.append(("negate", i))


def _col_add(mat, u, moves, i, j, c):
    """Column i += c * column j, with the matching row operation."""
    if c == 0:
        return
    for row in mat:
        row[i] += c * row[j]
    mat[i] = [x + c * y for x, y in zip(mat[i], mat[j])]
    for row in u:
        row[i] += c * row[j]
    moves.append(("add", i, j, c))


def _skew_normalize(omega, u=None, moves=None):
    """Reduce a unimodular skew integer matrix in place to interleaved
    [[0, 1], [-1, 0]] blocks; returns (U, moves)."""
    m = len(omega)
    if u is None:
        u = identity(m)
    if moves is None:
        moves = []
    base = 0
    while base < m:
        while True:
            best = None
            for j in range(base + 1, m):
                c = omega[base][j]
                if c and (best is None or abs(c) < abs(omega[base][best])):
                    best = j
            if best is None:
                raise AssertionError("skew row vanished before normalization")
            _col_swap(omega, u, moves, base + 1, best)
            a = omega[base][base + 1]
            reduced = True
            for j in range(base + 2, m):
                c = omega[base][j]
                if c:
                    q = c // a
                    if q:
                        _col_add(omega, u, moves, j, base + 1, -q)
                    if omega[base][j]:
                        reduced = False
            if reduced and abs(a) == 1:
                break
            if reduced:
                raise AssertionError("row gcd exceeded 1 in unimodular form")
        if omega[base][base + 1] == -1:
            _col_negate(omega, u, moves, base + 1)
        for j in range(base + 2, m):
            c = omega[base + 1][j]
            if c:
                _col_add(omega, u, moves, j, base, c)
            if omega[base][j]:
                raise AssertionError("clearing disturbed the finished row")
        base += 2
    return u, moves


def symplectic_normalize(v) -> SympBasisChange:
    """Deterministic U with U^T (V - V^T) U in interleaved symplectic form.

    Accepts a SeifertMatrix or a plain square integer grid; raises on a
    pairing whose determinant is not 1.

    >>> symplectic_normalize(((-1, 1), (0, -1))).U
    ((1, 0), (0, 1))
    """
    rows = v.rows() if isinstance(v, SeifertMatrix) else [list(r) for r in v]
    m = len(rows)
    omega = [[rows[i][j] - rows[j][i] for j in range(m)] for i in range(m)]
    if m % 2 or bareiss_det([row[:] for row in omega]) != 1:
        raise ValueError("non-unimodular antisymmetrization")
    u, moves = _skew_normalize(omega)
    return SympBasisChange(
        tuple(tuple(r) for r in u), tuple(tuple(mv) for mv in moves)
    )


__all__ = ["SympBasisChange", "symplectic_normalize"]
