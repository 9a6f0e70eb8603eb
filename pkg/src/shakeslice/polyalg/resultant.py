"""Resultants of integer Laurent polynomials.

The exported convention: ``resultant(p, q)`` is the product of p over the
roots of q, scaled by lc(q)^deg(p).  Equivalently it is the classical
Sylvester resultant Res(q, p) of the ordinary-polynomial parts.  With q a
monic cyclotomic product (the only downstream use) this is literally
``prod p(beta) over q(beta) = 0``, which is what branched-cover orders
consume.

Laurent units t^k are normalized away first: both arguments are shifted to
ordinary polynomials with nonzero constant term, which drops no roots and
is the documented unit-ambiguity convention.

Internally: Cohen's fraction-free subresultant polynomial remainder
sequence, so coefficient growth stays polynomial.  The Sylvester-matrix
determinant serves as the test oracle, not as the implementation.
"""

from __future__ import annotations

from .laurent import LaurentPoly


def _content(a: list[int]) -> int:
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g if g else 1


def _deg(a: list[int]) -> int:
    return len(a) - 1


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = _deg(b)
    lb = b[-1]
    steps = _deg(a) - db + 1
    for _ in range(steps):
        dr = _deg(r)
        if dr < db:
            r = [lb * c for c in r]
            continue
        lead = r[-1]
        r = [lb * c for c in r[:-1]]
        off = dr - db
        for i in range(db):
            r[off + i] -= lead * b[i]
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if r == [0]:
            return [0]
    return r


def _res_ordinary(a: list[int], b: list[int]) -> int:
    """Classical resultant Res(a, b) of ordinary integer polynomials.

    Cohen's subresultant algorithm (fraction-free PRS with the g/h
    correction factors).
    """
    if _deg(a) == 0 and _deg(b) == 0:
        return 1
    if _deg(a) == 0:
        return a[0] ** _deg(b)
    if _deg(b) == 0:
        return b[0] ** _deg(a)

    ca, cb = _content(a), _content(b)
    A = [c // ca for c in a]
    B = [c // cb for c in b]
    s = 1
    t = ca ** _deg(b) * cb ** _deg(a)
    if _deg(A) < _deg(B):
        A, B = B, A
        if _deg(A) % 2 == 1 and _deg(B) % 2 == 1:
            s = -s
    g = 1
    h = 1
    while True:
        da, db = _deg(A), _deg(B)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        if R == [0] or (len(R) == 1 and R[0] == 0):
            return 0
        A = B
        denom = g * h ** delta
        B = [c // denom for c in R]
        g = A[-1]
        if delta > 0:
            # h <- g^delta / h^(delta-1), exact in the subresultant theory
            num = g ** delta
            h = num // h ** (delta - 1) if delta > 1 else num
        if _deg(B) == 0:
            da = _deg(A)
            num = B[0] ** da
            res = num // h ** (da - 1) if da > 1 else num
            return s * t * res


def resultant(p: LaurentPoly, q: LaurentPoly) -> int:
    """Product of p over the roots of q, times lc(q)^deg(p), exactly.

    Laurent units are shifted away first, so only the ordinary-polynomial
    parts contribute.  Raises on zero input.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of zero polynomial undefined")
    # ordinary parts: canonical coeffs already have nonzero ends
    return _res_ordinary(list(q.coeffs), list(p.coeffs))
