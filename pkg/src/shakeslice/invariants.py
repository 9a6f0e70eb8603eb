"""Knot invariants: Alexander polynomials, signature functions at roots of
unity, Arf, branched cover orders, and first-jump brackets.

Every value is exact.  Signatures come from the inertia of the Hermitian
form (1-w)V + (1-conj(w))V^T over the cyclotomic field of the reduced root;
satellite expressions that have no single Seifert matrix (cables) are
handled by carriers that combine companion and pattern values instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Callable

from .polyalg.cyclo import CycloElement, RootOfUnity, _tables, eval_at_root
from .polyalg.hermitian import HermitianMatrix, hermitian_signature
from .polyalg.laurent import ONE, LaurentPoly, t_power_minus_one
from .polyalg.resultant import resultant
from .seifert.expr import Cable, KnotExpr, Mirror, Sum, seifert_matrix_of
from .seifert.matrices import (
    EMPTY,
    SeifertMatrix,
    alexander_poly,
    mirror as mirror_matrix,
    torus_seifert,
)
from .seifert.sympl import symplectic_normalize

PLAIN = "plain"
AVERAGED = "averaged"

_PROBE_START = 8
_PROBE_LIMIT = 1 << 20


@dataclass(frozen=True)
class ArfValue:
    """Arf invariant as a single bit."""

    bit: int


@dataclass(frozen=True)
class InvariantCarrier:
    """Enough invariant data to run every obstruction without a matrix.

    delta is the symmetric Alexander polynomial with delta(1) = 1; sig_eval
    maps a root of unity (and a convention mode) to the signature there;
    source records whether a Seifert matrix stands behind the values.
    """

    delta: LaurentPoly
    sig_eval: Callable[..., int]
    source: str


@lru_cache(maxsize=8192)
def _matrix_inertia(mat: SeifertMatrix, root: RootOfUnity):
    """Inertia of (1-w)V + (1-conj(w))V^T at w = zeta, exactly."""
    r = root.reduced()
    n = r.n
    a = eval_at_root(LaurentPoly(0, (1, -1)), r)   # 1 - w
    b = a.conj()
    av, bv = a.nums, b.nums
    d = _tables(n)[0]
    m = mat.size
    rows = mat.entries
    ent = [
        [
            CycloElement(
                n,
                [x * rows[i][j] + y * rows[j][i] for x, y in zip(av, bv)],
            )
            for j in range(m)
        ]
        for i in range(m)
    ]
    return hermitian_signature(HermitianMatrix(ent, n))


def _plain_matrix_signature(mat: SeifertMatrix, root: RootOfUnity) -> int:
    if root.reduced().is_one or mat.size == 0:
        return 0
    pos, neg, _ = _matrix_inertia(mat, root)
    return pos - neg


def _one_sided_limit(mat: SeifertMatrix, root: RootOfUnity, side: int) -> int:
    r = root.reduced()
    m = _PROBE_START
    prev = None
    agree = 0
    while m <= _PROBE_LIMIT:
        probe = RootOfUnity(r.k * m + side, r.n * m)
        pos, neg, null = _matrix_inertia(mat, probe)
        if null == 0:
            s = pos - neg
            if s == prev:
                agree += 1
                if agree >= 2:
                    return s
            else:
                agree = 0
            prev = s
        else:
            prev = None
            agree = 0
        m *= 2
    raise RuntimeError("one-sided signature probes did not stabilize")


def _averaged_matrix_signature(mat: SeifertMatrix, root: RootOfUnity) -> int:
    if root.reduced().is_one or mat.size == 0:
        return 0
    lo = _one_sided_limit(mat, root, -1)
    hi = _one_sided_limit(mat, root, +1)
    total = lo + hi
    if total % 2:
        raise AssertionError("signature limits summed to an odd number")
    return total // 2


def _matrix_signature(mat: SeifertMatrix, root: RootOfUnity, mode: str) -> int:
    if mode == PLAIN:
        return _plain_matrix_signature(mat, root)
    if mode == AVERAGED:
        return _averaged_matrix_signature(mat, root)
    raise ValueError(f"unknown signature mode {mode!r}")


def _matrix_carrier(mat: SeifertMatrix) -> InvariantCarrier:
    def sig(root: RootOfUnity, mode: str = PLAIN) -> int:
        return _matrix_signature(mat, root, mode)

    return InvariantCarrier(
        delta=alexander_poly(mat), sig_eval=sig, source="matrix-backed"
    )


def _torus_carrier(m: int, r: int) -> InvariantCarrier:
    if m == 1 or r in (-1, 0, 1):
        return _matrix_carrier(EMPTY)
    if r >= 2:
        return _matrix_carrier(torus_seifert(m, r))
    return carrier_of_matrix_mirror(torus_seifert(m, -r))


def carrier_of_matrix_mirror(mat: SeifertMatrix) -> InvariantCarrier:
    return _matrix_carrier(mirror_matrix(mat))


def carrier_of(knot) -> InvariantCarrier:
    """Invariant carrier for a knot expression or Seifert matrix.

    Expressions with a Seifert matrix model are matrix-backed; anything
    containing a cable falls back to the satellite formulas: the Alexander
    polynomial picks up the companion factor at t^m, the signature adds the
    companion value at w^m.
    """
    if isinstance(knot, SeifertMatrix):
        return _matrix_carrier(knot)
    if isinstance(knot, InvariantCarrier):
        return knot
    if not isinstance(knot, KnotExpr):
        raise TypeError(f"cannot build a carrier from {knot!r}")
    mat = seifert_matrix_of(knot)
    if mat is not None:
        return _matrix_carrier(mat)
    if isinstance(knot, Mirror):
        inner = carrier_of(knot.inner)

        def sig_m(root: RootOfUnity, mode: str = PLAIN) -> int:
            return -inner.sig_eval(root, mode)

        return InvariantCarrier(inner.delta, sig_m, "formula-backed")
    if isinstance(knot, Sum):
        parts = [carrier_of(p) for p in knot.parts]
        delta = ONE
        for p in parts:
            delta = delta * p.delta

        def sig_s(root: RootOfUnity, mode: str = PLAIN) -> int:
            return sum(p.sig_eval(root, mode) for p in parts)

        return InvariantCarrier(delta, sig_s, "formula-backed")
    if isinstance(knot, Cable):
        companion = _torus_carrier(knot.m, knot.r)
        inner = carrier_of(knot.inner)
        winding = knot.m
        delta = companion.delta * inner.delta.substitute_power(winding)

        def sig_c(root: RootOfUnity, mode: str = PLAIN) -> int:
            return companion.sig_eval(root, mode) + inner.sig_eval(
                root.power(winding), mode
            )

        return InvariantCarrier(delta, sig_c, "formula-backed")
    raise TypeError(f"not a knot expression: {knot!r}")


def tl_signature(target, root: RootOfUnity, mode: str = PLAIN) -> int:
    """Signature of (1-w)V + (1-conj(w))V^T at the root of unity w.

    In the normative "plain" convention a singular form simply contributes
    nothing for its null directions; "averaged" takes the mean of the two
    one-sided limits along the circle.  The value at w = 1 is 0.
    """
    if mode not in (PLAIN, AVERAGED):
        raise ValueError(f"unknown signature mode {mode!r}")
    if isinstance(target, SeifertMatrix):
        return _matrix_signature(target, root, mode)
    return carrier_of(target).sig_eval(root, mode)


def arf(target) -> ArfValue:
    """Arf invariant, computed two ways when a matrix is available.

    The Alexander route reads |delta(-1)| mod 8 (1 or 7 means 0, 3 or 5
    means 1); the quadratic route normalizes a symplectic basis and sums
    q(a_i) q(b_i) mod 2 with q(x) = x^T V x.  Disagreement is an internal
    error, not a value.
    """
    carrier = carrier_of(target)
    d = abs(carrier.delta.evaluate(-1)) % 8
    if d in (1, 7):
        bit = 0
    elif d in (3, 5):
        bit = 1
    else:
        raise AssertionError("Alexander value at -1 incompatible with a knot")
    mat = None
    if isinstance(target, SeifertMatrix):
        mat = target
    elif isinstance(target, KnotExpr):
        mat = seifert_matrix_of(target)
    if mat is not None and mat.size:
        change = symplectic_normalize(mat)
        cols = list(zip(*change.U))
        rows = mat.entries

        def q(vec):
            total = 0
            for i, x in enumerate(vec):
                if x:
                    for j, y in enumerate(vec):
                        if y:
                            total += x * rows[i][j] * y
            return total % 2

        quad = 0
        for pair in range(mat.size // 2):
            quad += q(cols[2 * pair]) * q(cols[2 * pair + 1])
        if quad % 2 != bit:
            raise AssertionError("Arf methods disagree")
    return ArfValue(bit)


def branched_cover_order(target, n: int) -> int:
    """Order of the first homology of the n-fold branched cover: the
    absolute resultant of the Alexander polynomial with t^n - 1.

    Returns 0 when the homology is infinite (some n-th root of unity is an
    Alexander zero).
    """
    n = int(n)
    if n < 1:
        raise ValueError("cover degree must be at least 1")
    delta = carrier_of(target).delta
    ordinary = delta.shifted(-delta.lo)
    return abs(resultant(ordinary, t_power_minus_one(n)))


def _sig_at(carrier: InvariantCarrier, theta: Fraction) -> int:
    return carrier.sig_eval(RootOfUnity(theta.numerator, theta.denominator))


def _strided_mediant(carrier, a, b, den_cap, zero_side):
    """Farthest k-fold mediant whose signature test matches one side.

    For zero_side=True, mediants (a + k*b) walk from a toward b and the
    largest k whose signature is still 0 is returned (as a new a); for
    zero_side=False, mediants (k*a + b) walk from b toward a and the
    largest k still nonzero is returned (as a new b).  Returns None when
    even k = 1 violates the denominator cap.
    """

    def cand(k):
        if zero_side:
            return Fraction(a.numerator + k * b.numerator,
                            a.denominator + k * b.denominator)
        return Fraction(k * a.numerator + b.numerator,
                        k * a.denominator + b.denominator)

    def matches(f):
        s = _sig_at(carrier, f)
        return (s == 0) if zero_side else (s != 0)

    first = cand(1)
    if first.denominator > den_cap:
        return None
    if not matches(first):
        raise AssertionError("stride called against the mediant's side")
    k, best = 1, first
    while True:
        nxt = cand(2 * k)
        if nxt.denominator > den_cap or not matches(nxt):
            break
        k, best = 2 * k, nxt
    lo_k, hi_k = k, 2 * k
    while lo_k + 1 < hi_k:
        mid = (lo_k + hi_k) // 2
        f = cand(mid)
        if f.denominator <= den_cap and matches(f):
            lo_k, best = mid, f
        else:
            hi_k = mid
    return best


def _refine_bracket(carrier, a, b, resolution, den_cap):
    """Shrink a bracket with sig(a) = 0 (or a = 0) and sig(b) != 0 down to
    the resolution by strided mediant descent; None past the cap."""
    while b - a > resolution:
        m = Fraction(a.numerator + b.numerator, a.denominator + b.denominator)
        if m.denominator > den_cap:
            return None
        if _sig_at(carrier, m) == 0:
            stepped = _strided_mediant(carrier, a, b, den_cap, zero_side=True)
            if stepped is None:
                return None
            a = stepped
        else:
            stepped = _strided_mediant(carrier, a, b, den_cap, zero_side=False)
            if stepped is None:
                return None
            b = stepped
    return (a, b)


def first_jump_bracket(target, resolution):
    """Bracket the first place in (0, 1/2] where the signature function
    turns on: a pair (a, b) of rationals with sig = 0 at a (or a = 0),
    sig != 0 at b, and b - a at most the resolution; None when no jump is
    found within the denominator cap of 4 * ceil(1/resolution).

    The search walks signature values at Farey fractions of growing order
    and refines the first zero-to-nonzero step by strided mediants; every
    probed value is exact.
    """
    resolution = Fraction(resolution)
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    carrier = carrier_of(target)
    den_cap = 4 * ceil(1 / resolution)
    half = Fraction(1, 2)
    probed: dict[Fraction, int] = {}
    for order in (8, 24, 64):
        if order > den_cap:
            break
        fracs = sorted(
            {
                Fraction(p, q)
                for q in range(2, order + 1)
                for p in range(1, q // 2 + 1)
            }
        )
        for f in fracs:
            if f > half:
                continue
            if f not in probed:
                probed[f] = _sig_at(carrier, f)
            if probed[f]:
                below = [g for g, s in probed.items() if g < f and s == 0]
                lo = max(below, default=Fraction(0))
                return _refine_bracket(carrier, lo, f, resolution, den_cap)
    return None


__all__ = [
    "ArfValue",
    "InvariantCarrier",
    "carrier_of",
    "tl_signature",
    "arf",
    "branched_cover_order",
    "first_jump_bracket",
    "PLAIN",
    "AVERAGED",
]
