"""Small dense integer matrix helpers shared by the Seifert-side modules.

Everything works on lists of lists of ints; sizes here are the handful of
rows a Seifert matrix has, so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    if not a or not b:
        return [[] for _ in a]
    cols = len(b[0])
    inner = len(b)
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def unimodular_inverse(a) -> list[list[int]]:
    """Inverse of an integer matrix with determinant +-1, as integers."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for k in range(n):
        p = next((i for i in range(k, n) if work[i][k]), None)
        if p is None:
            raise ValueError("matrix is singular")
        if p != k:
            work[k], work[p] = work[p], work[k]
        inv = 1 / work[k][k]
        work[k] = [x * inv for x in work[k]]
        for i in range(n):
            if i != k and work[i][k]:
                f = work[i][k]
                work[i] = [x - f * y for x, y in zip(work[i], work[k])]
    out = [[c for c in row[n:]] for row in work]
    for row in out:
        for c in row:
            if c.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(c) for c in row] for row in out]


def congruence(u, v):
    """u^T v u for square v."""
    return mat_mul(transpose(u), mat_mul(v, u))
