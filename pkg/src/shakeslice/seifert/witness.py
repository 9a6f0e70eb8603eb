"""Witness surfaces for genus-h representatives in a once-shaken form.

Given a knot matrix V of genus m whose top-left block of size 2(m-g) is
Alexander-trivial, the construction splits off the remaining g handle pairs
symplectically, normalizes framing parities, attaches g-h shake blocks, and
slides the surgered handles across them.  The resulting sub-basis of size
2(m-h) carries a form whose pencil determinant is +-t^(m-h) exactly when
the witness works; that check is recorded rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._mat import identity, mat_mul, mat_neg, transpose, unimodular_inverse
from .matrices import (
    KNOT,
    LINK,
    SeifertMatrix,
    is_alexander_trivial,
    pencil_det,
    shaking_matrix,
)
from .sympl import _col_add, _col_negate, _col_swap, _skew_normalize


@dataclass(frozen=True)
class GenusWitness:
    """Outcome of the witness construction.

    M is the full shaken form after all basis changes, subbasis the 0-based
    rows spanning the witness surface, M_sub the restricted form, h the
    target genus, and verified the exact pencil-determinant check.
    """

    M: SeifertMatrix
    subbasis: tuple[int, ...]
    M_sub: SeifertMatrix
    h: int
    verified: bool


def _arf_from_pencil(v: SeifertMatrix) -> int:
    d = abs(pencil_det(v).evaluate(-1)) % 8
    if d in (1, 7):
        return 0
    if d in (3, 5):
        return 1
    raise AssertionError("pencil value at -1 incompatible with a knot form")


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _split_sector(work, s, g):
    """Congruence making the last 2g rows a symplectic complement of the
    first s, grouped a_1..a_g then b_1..b_g; mutates nothing, returns the
    transformed matrix."""
    m2 = len(work)
    omega = [[work[i][j] - work[j][i] for j in range(m2)] for i in range(m2)]
    o11 = [row[:s] for row in omega[:s]]
    o12 = [row[s:] for row in omega[:s]]
    o22 = [row[s:] for row in omega[s:]]
    if s:
        o11inv = unimodular_inverse(o11)
        ohat = _mat_add(o22, mat_mul(transpose(o12), mat_mul(o11inv, o12)))
    else:
        ohat = [row[:] for row in o22]
    w_int, _ = _skew_normalize(ohat)
    pi = [[0] * (2 * g) for _ in range(2 * g)]
    for j in range(g):
        pi[2 * j][j] = 1
        pi[2 * j + 1][g + j] = 1
    w_g = mat_mul(w_int, pi)
    if s:
        x = mat_neg(mat_mul(o11inv, mat_mul(o12, w_g)))
    else:
        x = []
    u_a = [[0] * m2 for _ in range(m2)]
    for i in range(s):
        u_a[i][i] = 1
        for j in range(2 * g):
            u_a[i][s + j] = x[i][j]
    for i in range(2 * g):
        for j in range(2 * g):
            u_a[s + i][s + j] = w_g[i][j]
    return mat_mul(transpose(u_a), mat_mul(work, u_a))


def shake1_genus_witness(v: SeifertMatrix, g: int, h: int) -> GenusWitness:
    """Build a genus-h witness inside the once-shaken form of V.

    g counts the handle pairs outside the Alexander-trivial top-left block;
    h of them are kept, g-h are surgered across fresh shake blocks.
    """
    if v.kind != KNOT:
        raise ValueError("witness construction needs a knot Seifert matrix")
    m = v.size // 2
    g, h = int(g), int(h)
    if not 0 <= h <= g <= m:
        raise ValueError("need 0 <= h <= g <= genus")
    if h == 0 and _arf_from_pencil(v):
        raise ValueError("parity obstruction: Arf nonzero")
    s = 2 * (m - g)
    top = SeifertMatrix(
        tuple(tuple(row[:s]) for row in v.entries[:s]), LINK
    )
    if not is_alexander_trivial(top):
        raise ValueError(
            f"top-left block of size {s} is not Alexander-trivial"
        )

    work = v.rows()
    if g:
        work = _split_sector(work, s, g)

    def a_pos(l):
        return s + (l - 1)

    def b_pos(l):
        return s + g + (l - 1)

    scratch_u = identity(2 * m)
    moves: list = []
    bad = []
    for l in range(1, g + 1):
        pa, pb = a_pos(l), b_pos(l)
        if work[pa][pa] % 2 == 0:
            continue
        if work[pb][pb] % 2 == 0:
            _col_swap(work, scratch_u, moves, pa, pb)
            _col_negate(work, scratch_u, moves, pb)
        else:
            bad.append(l)
    for i in range(0, len(bad) - 1, 2):
        li, lj = bad[i], bad[i + 1]
        _col_add(work, scratch_u, moves, a_pos(li), a_pos(lj), 1)
        _col_add(work, scratch_u, moves, b_pos(lj), b_pos(li), -1)
        _col_add(work, scratch_u, moves, a_pos(lj), b_pos(lj), 1)
    if len(bad) % 2:
        if h == 0:
            raise AssertionError("parity leftover after a clean Arf check")
        leftover = bad[-1]
        if leftover != g:
            _col_swap(work, scratch_u, moves, a_pos(leftover), a_pos(g))
            _col_swap(work, scratch_u, moves, b_pos(leftover), b_pos(g))
    for l in range(1, g - h + 1):
        if work[a_pos(l)][a_pos(l)] % 2:
            raise AssertionError("surgered handle kept an odd framing")

    base = SeifertMatrix(tuple(tuple(r) for r in work), KNOT)
    rows = shaking_matrix(base, g - h, 1).rows()
    total = len(rows)
    scratch_u = identity(total)
    for l in range(1, g - h + 1):
        alpha = 2 * m + 2 * (l - 1)
        _col_add(rows, scratch_u, moves, a_pos(l), alpha, 1)
    sub = (
        list(range(s))
        + [a_pos(l) for l in range(1, g - h + 1)]
        + [b_pos(l) for l in range(1, g - h + 1)]
    )
    for l in range(1, g - h + 1):
        pa = a_pos(l)
        beta = 2 * m + 2 * (l - 1) + 1
        for r in sub:
            if r == pa:
                d = rows[pa][pa]
                if d % 2:
                    raise AssertionError("odd framing reached the clearing step")
                c = -(d // 2)
            else:
                c = -rows[r][pa]
            if c:
                _col_add(rows, scratch_u, moves, r, beta, c)

    m_full = SeifertMatrix(tuple(tuple(r) for r in rows), LINK)
    m_sub = SeifertMatrix(
        tuple(tuple(rows[i][j] for j in sub) for i in sub), LINK
    )
    q = pencil_det(m_sub)
    verified = q.coeffs in ((1,), (-1,)) and q.lo == m - h
    return GenusWitness(
        M=m_full,
        subbasis=tuple(sub),
        M_sub=m_sub,
        h=h,
        verified=verified,
    )


__all__ = ["GenusWitness", "shake1_genus_witness"]
