"""Hermitian matrices over Q(zeta_n) and their exact inertia.

The heavy lifting happens in the kernel elimination engine, which is generic
over the coefficient ring; this module supplies the ring callbacks (packed
multiplication, Galois conjugation, quasi-inverse division, interval signs)
and handles denominator clearing and bandwidth detection.
"""

from __future__ import annotations

from math import lcm

from .._kernels import cyclo_mul, hermitian_inertia, vec_scalar_divexact
from .cyclo import CycloElement, _tables, quasi_inverse, vec_conj, vec_sign


def _coerce(entry, n: int) -> CycloElement:
    if isinstance(entry, CycloElement):
        return entry.lift(n)
    return CycloElement.from_rational(entry, n)


class HermitianMatrix:
    """Square matrix over Q(zeta_n) with entries[j][i] == conj(entries[i][j]).

    Entries may be given as ints, Fractions, or CycloElements at any
    conductor dividing the join; everything is lifted to the common
    conductor n before the symmetry check.
    """

    __slots__ = ("n", "entries")

    def __init__(self, entries, n: int | None = None):
        grid = [list(row) for row in entries]
        m = len(grid)
        for row in grid:
            if len(row) != m:
                raise ValueError("matrix is not square")
        join = 1
        for row in grid:
            for e in row:
                if isinstance(e, CycloElement):
                    join = lcm(join, e.n)
        if n is None:
            n = join
        elif n % join:
            raise ValueError("requested conductor does not contain all entries")
        lifted = tuple(
            tuple(_coerce(e, n) for e in row) for row in grid
        )
        for i in range(m):
            for j in range(i, m):
                if lifted[j][i] != lifted[i][j].conj():
                    raise ValueError("matrix is not Hermitian")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", lifted)

    def __setattr__(self, *_):
        raise AttributeError("HermitianMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __repr__(self):
        return f"HermitianMatrix(n={self.n}, size={self.size})"


def _int_inertia(rows, band):
    def divider(prev):
        def div(u):
            q, r = divmod(u, prev)
            if r:
                raise AssertionError("inexact pivot division")
            return q

        return div

    return hermitian_inertia(
        rows,
        mul=lambda a, b: a * b,
        sub=lambda a, b: a - b,
        conj=lambda a: a,
        sign=lambda a: (a > 0) - (a < 0),
        is_zero=lambda a: a == 0,
        divider=divider,
        zero=0,
        band=band,
    )


def _vec_inertia(rows, n, band):
    d, _, red = _tables(n)

    def mul(a, b):
        return cyclo_mul(list(a), list(b), red)

    def sub(a, b):
        return [x - y for x, y in zip(a, b)]

    def conj(a):
        return vec_conj(a, n)

    def sign(a):
        if vec_conj(a, n) != list(a):
            raise AssertionError("pivot drifted off the real line")
        return vec_sign(a, n)

    def divider(prev):
        vt, norm = quasi_inverse(prev, n)
        if norm == 1 and vt[0] == 1 and not any(vt[1:]):
            return lambda u: u

        def div(u):
            return vec_scalar_divexact(cyclo_mul(list(u), vt, red), norm)

        return div

    return hermitian_inertia(
        rows,
        mul=mul,
        sub=sub,
        conj=conj,
        sign=sign,
        is_zero=lambda a: not any(a),
        divider=divider,
        zero=[0] * d,
        band=band,
    )


def hermitian_signature(h: HermitianMatrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, null) of a Hermitian matrix, exactly.

    Denominators are cleared by a positive common multiple, which leaves the
    inertia untouched; the bandwidth is detected so banded inputs take the
    windowed elimination path.
    """
    m = h.size
    if m == 0:
        return (0, 0, 0)
    scale = 1
    for row in h.entries:
        for e in row:
            scale = lcm(scale, e.den)
    d = _tables(h.n)[0]
    raw = [
        [[c * (scale // e.den) for c in e.nums] for e in row]
        for row in h.entries
    ]
    band = 0
    for i in range(m):
        for j in range(m):
            if any(raw[i][j]) and abs(i - j) > band:
                band = abs(i - j)
    if d == 1:
        rows = [[v[0] for v in row] for row in raw]
        pos, neg, null = _int_inertia(rows, band)
    else:
        pos, neg, null = _vec_inertia(raw, h.n, band)
    return (int(pos), int(neg), int(null))


__all__ = ["HermitianMatrix", "hermitian_signature"]
