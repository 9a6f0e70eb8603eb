"""Exact cyclotomic arithmetic: roots of unity, elements of Q(zeta_n), and
rigorous sign determination for real elements.

Elements are stored as rational-coefficient representatives of degree less
than deg Phi_n, reduced mod the n-th cyclotomic polynomial, so the zero test
is exact (the quotient is a field).  Signs of real elements are decided by
adaptive-precision interval arithmetic at the embedding zeta_n = e^(2*pi*i/n),
refined until the interval excludes zero; termination is guaranteed because
nonzero elements have nonzero canonical form.

The designated embedding and the environment knob TRACE_EMBED_PRECISION_BITS
(initial precision, default 128; doubling is unaffected) are shared with the
Hermitian elimination engine, which calls the raw-vector helpers directly.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .._kernels import cyclo_mul, poly_mul
from .laurent import LaurentPoly

_IV_LOCK = threading.Lock()
_COS_ROWS: dict[tuple[int, int], list] = {}

_SIGN_BITS_CAP = 1 << 22


def _initial_bits() -> int:
    raw = os.environ.get("TRACE_EMBED_PRECISION_BITS", "")
    try:
        bits = int(raw)
    except ValueError:
        bits = 0
    return bits if bits >= 8 else 128


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of ordinary integer polynomials (ascending coeffs)."""
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(den) - 1]
        q, r = divmod(c, lead)
        if r:
            raise AssertionError("inexact cyclotomic division")
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                rem[i + j] -= q * dj
    if any(rem):
        raise AssertionError("nonzero remainder in cyclotomic division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]          # t^n - 1
    den = [1]
    for d in _divisors(n)[:-1]:
        den = list(poly_mul(den, list(_cyclotomic_coeffs(d))))
    return tuple(_poly_divexact(num, den))


def cyclotomic_polynomial(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial Phi_n as an ordinary polynomial.

    Computed by dividing t^n - 1 by the product of Phi_d over proper
    divisors d of n; cached.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return LaurentPoly(0, _cyclotomic_coeffs(n))


@lru_cache(maxsize=None)
def _tables(n: int):
    """Power basis data for Q(zeta_n): (d, power, red).

    power[e] is the length-d integer vector of t^e mod Phi_n for e in
    0..n-1; red[e-d] covers the product exponents e = d..2d-2 (folded through
    t^n = 1).
    """
    phi = list(_cyclotomic_coeffs(n))
    d = len(phi) - 1
    power = []
    for e in range(n):
        if e < d:
            row = [0] * d
            row[e] = 1
        else:
            # t^e = t * t^(e-1) mod Phi_n
            prior = power[e - 1]
            row = [0] + list(prior[: d - 1])
            c = prior[d - 1]
            if c:
                for i in range(d):
                    row[i] -= c * phi[i]
        power.append(row)
    power = tuple(tuple(r) for r in power)
    red = tuple(power[e % n] for e in range(d, 2 * d - 1))
    return d, power, red


def galois_apply(vec, a: int, n: int) -> list[int]:
    """Apply the Galois substitution zeta -> zeta^a to a raw vector."""
    d, power, _ = _tables(n)
    out = [0] * d
    for j, c in enumerate(vec):
        if c:
            row = power[(a * j) % n]
            for i in range(d):
                ri = row[i]
                if ri:
                    out[i] += c * ri
    return out


def vec_conj(vec, n: int) -> list[int]:
    """Complex conjugation (zeta -> zeta^(n-1)) on a raw vector."""
    if n <= 2:
        return list(vec)
    return galois_apply(vec, n - 1, n)


def quasi_inverse(vec, n: int) -> tuple[list[int], int]:
    """For a nonzero raw integer vector v, return (vt, N) with v*vt = N > 0.

    vt is the product of the nontrivial Galois conjugates of v, so v*vt is
    the field norm: a rational integer.  Division by v then becomes one
    multiplication and one exact scalar division.
    """
    d, _, red = _tables(n)
    vt = [0] * d
    vt[0] = 1
    for a in range(2, n):
        if gcd(a, n) == 1:
            vt = cyclo_mul(vt, galois_apply(vec, a, n), red)
    prod = cyclo_mul(list(vec), vt, red)
    N = prod[0]
    if any(prod[1:]):
        raise AssertionError("field norm came out irrational")
    if N == 0:
        raise ZeroDivisionError("quasi-inverse of zero")
    if N < 0:
        N = -N
        vt = [-c for c in vt]
    return vt, N


def _cos_row(n: int, prec: int):
    key = (n, prec)
    row = _COS_ROWS.get(key)
    if row is None:
        old = mpmath.iv.prec
        try:
            mpmath.iv.prec = prec
            two_pi = 2 * mpmath.iv.pi
            row = [mpmath.iv.cos(two_pi * j / n) for j in range(n)]
        finally:
            mpmath.iv.prec = old
        _COS_ROWS[key] = row
    return row


def vec_sign(vec, n: int) -> int:
    """Sign (-1, 0, +1) of a raw vector known to represent a real element."""
    if not any(vec):
        return 0
    bits = _initial_bits()
    while True:
        with _IV_LOCK:
            row = _cos_row(n, bits)
            old = mpmath.iv.prec
            try:
                mpmath.iv.prec = bits
                acc = mpmath.iv.mpf(0)
                for j, c in enumerate(vec):
                    if c:
                        acc += row[j] * c
            finally:
                mpmath.iv.prec = old
        if acc.a > 0:
            return 1
        if acc.b < 0:
            return -1
        bits *= 2
        if bits > _SIGN_BITS_CAP:
            raise RuntimeError("interval sign determination did not converge")


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_n^k = e^(2*pi*i*k/n); equality compares the reduced fraction k/n.

    >>> RootOfUnity(2, 6) == RootOfUnity(1, 3)
    True
    """

    k: int
    n: int

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise ValueError("root-of-unity order must be positive")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", int(self.k) % n)

    def reduced(self) -> RootOfUnity:
        g = gcd(self.k, self.n)
        return RootOfUnity(self.k // g, self.n // g)

    @property
    def is_one(self) -> bool:
        return self.k == 0

    def conj(self) -> RootOfUnity:
        return RootOfUnity(-self.k, self.n)

    def power(self, m: int) -> RootOfUnity:
        return RootOfUnity(self.k * m, self.n)

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return (a.k, a.n) == (b.k, b.n)

    def __hash__(self):
        r = self.reduced()
        return hash((r.k, r.n))


class CycloElement:
    """Element of Q(zeta_n): integer vector over the power basis, over a
    positive denominator, fully reduced.

    The conductor n is context, not canonical field data: lifting to a
    multiple conductor changes the representation but not the value, and
    cross-conductor equality is not attempted (operations lift explicitly).
    """

    __slots__ = ("n", "nums", "den")

    def __init__(self, n: int, nums, den: int = 1):
        d = _tables(n)[0]
        nums = [int(c) for c in nums]
        if len(nums) != d:
            raise ValueError(f"conductor {n} needs vectors of length {d}")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        g = 0
        for c in nums:
            g = gcd(g, c)
        g = gcd(g, den)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            den = 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("CycloElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, q, n: int = 1) -> CycloElement:
        q = Fraction(q)
        d = _tables(n)[0]
        nums = [0] * d
        nums[0] = q.numerator
        return cls(n, nums, q.denominator)

    @classmethod
    def zero(cls, n: int = 1) -> CycloElement:
        return cls(n, [0] * _tables(n)[0], 1)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.nums)

    @property
    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    def is_real(self) -> bool:
        return self.conj() == self

    def sign(self) -> int:
        """Exact sign of a real element."""
        if not self.is_real():
            raise ValueError("sign of a non-real element")
        return vec_sign(self.nums, self.n)

    # -- arithmetic ----------------------------------------------------------

    def _match(self, other: CycloElement):
        if not isinstance(other, CycloElement):
            raise TypeError("expected CycloElement")
        if self.n != other.n:
            raise ValueError("conductor mismatch; lift explicitly")

    def __add__(self, other: CycloElement) -> CycloElement:
        self._match(other)
        a, b = self, other
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return CycloElement(self.n, nums, a.den * b.den)

    def __neg__(self) -> CycloElement:
        return CycloElement(self.n, [-c for c in self.nums], self.den)

    def __sub__(self, other: CycloElement) -> CycloElement:
        return self + (-other)

    def __mul__(self, other: CycloElement) -> CycloElement:
        self._match(other)
        red = _tables(self.n)[2]
        nums = cyclo_mul(list(self.nums), list(other.nums), red)
        return CycloElement(self.n, nums, self.den * other.den)

    def conj(self) -> CycloElement:
        return CycloElement(self.n, vec_conj(self.nums, self.n), self.den)

    def lift(self, n: int) -> CycloElement:
        """Re-express in Q(zeta_n) for a conductor multiple n."""
        if n == self.n:
            return self
        if n % self.n:
            raise ValueError("can only lift to a multiple conductor")
        step = n // self.n
        d, power, _ = _tables(n)
        out = [0] * d
        for j, c in enumerate(self.nums):
            if c:
                row = power[(j * step) % n]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloElement(n, out, self.den)

    def __eq__(self, other):
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (self.n, self.nums, self.den) == (other.n, other.nums, other.den)

    def __hash__(self):
        return hash((self.n, self.nums, self.den))

    def __repr__(self):
        return f"CycloElement(n={self.n}, nums={self.nums}, den={self.den})"


def eval_at_root(p: LaurentPoly, w: RootOfUnity) -> CycloElement:
    """Exact value p(zeta_n^k) as a CycloElement at the reduced conductor."""
    r = w.reduced()
    n = r.n
    d, power, _ = _tables(n)
    out = [0] * d
    for i, c in enumerate(p.coeffs):
        if c:
            row = power[((p.lo + i) * r.k) % n]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
    return CycloElement(n, out, 1)


def delta_one_normalized(p: LaurentPoly) -> LaurentPoly:
    """Normalize by a unit so the result q satisfies q(t) = q(t^{-1}) and
    q(1) = 1; raises if the input cannot be so normalized."""
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    if (p.lo + p.hi) % 2:
        raise ValueError("polynomial breadth is odd; no symmetric unit shift")
    q = p.shifted(-(p.lo + p.hi) // 2)
    if q != q.reverse():
        raise ValueError("polynomial is not reciprocal")
    v = q.evaluate(1)
    if v == 1:
        return q
    if v == -1:
        return -q
    raise ValueError(f"value at 1 is {v}, not a unit")


__all__ = [
    "RootOfUnity",
    "CycloElement",
    "cyclotomic_polynomial",
    "euler_phi",
    "eval_at_root",
    "galois_apply",
    "vec_conj",
    "vec_sign",
    "quasi_inverse",
    "delta_one_normalized",
]
