"""Integer Laurent polynomials in one variable, exact and canonical.

A polynomial is the pair (lo, coeffs): ``coeffs`` runs over ascending
exponents starting at ``lo``, with the first and last entry nonzero.  The
zero polynomial is the empty run with lo = 0.  Values are immutable and
hashable, so they can seed caches safely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .._kernels import poly_mul


@dataclass(frozen=True)
class LaurentPoly:
    """Canonical integer Laurent polynomial.

    >>> t = LaurentPoly(1, (1,))
    >>> print(t * t - t)
    -t + t^2
    >>> print(LaurentPoly(-1, (1, -1, 1)))
    t^-1 - 1 + t
    """

    lo: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        lo = int(self.lo)
        a = 0
        b = len(coeffs)
        while a < b and coeffs[a] == 0:
            a += 1
        while b > a and coeffs[b - 1] == 0:
            b -= 1
        if a == b:
            lo, coeffs = 0, ()
        else:
            lo, coeffs = lo + a, coeffs[a:b]
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "coeffs", coeffs)

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def hi(self) -> int:
        """Highest exponent (lo for the zero polynomial)."""
        return self.lo + len(self.coeffs) - 1 if self.coeffs else self.lo

    @property
    def breadth(self) -> int:
        """hi - lo; the degree of the ordinary-polynomial part."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def coeff(self, e: int) -> int:
        if self.coeffs and self.lo <= e <= self.hi:
            return self.coeffs[e - self.lo]
        return 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.lo - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.lo - lo + i] += c
        return LaurentPoly(lo, tuple(out))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.lo, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero or other.is_zero:
            return ZERO
        return LaurentPoly(self.lo + other.lo,
                           tuple(poly_mul(list(self.coeffs), list(other.coeffs))))

    def scaled(self, c: int) -> LaurentPoly:
        return LaurentPoly(self.lo, tuple(c * x for x in self.coeffs))

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by the unit t^k."""
        return LaurentPoly(self.lo + k, self.coeffs)

    def reverse(self) -> LaurentPoly:
        """Substitute t -> t^{-1}."""
        return LaurentPoly(-self.hi, tuple(reversed(self.coeffs)))

    def substitute_power(self, m: int) -> LaurentPoly:
        """Substitute t -> t^m for a nonzero integer m."""
        if m == 0:
            raise ValueError("substitution exponent must be nonzero")
        if self.is_zero:
            return ZERO
        if m < 0:
            return self.reverse().substitute_power(-m)
        if m == 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return LaurentPoly(self.lo * m, tuple(out))

    def evaluate(self, x):
        """Evaluate at a nonzero rational (or integer) point."""
        if self.is_zero:
            return Fraction(0) if not isinstance(x, int) else 0
        if x == 0:
            if self.lo < 0:
                raise ValueError("cannot evaluate a Laurent polynomial at 0")
            return self.coeff(0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.lo >= 0:
            return acc * x ** self.lo
        r = acc * Fraction(x) ** self.lo
        return int(r) if r.denominator == 1 else r

    # -- serialization and display ----------------------------------------

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> LaurentPoly:
        if not isinstance(obj, dict) or set(obj) != {"lo", "coeffs"}:
            raise ValueError('expected {"lo": int, "coeffs": [int, ...]}')
        return cls(obj["lo"], tuple(obj["coeffs"]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.lo + i
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))


def monomial(c: int, e: int) -> LaurentPoly:
    return LaurentPoly(e, (c,))


def t_power_minus_one(n: int) -> LaurentPoly:
    """The polynomial t^n - 1 (n >= 1)."""
    if n < 1:
        raise ValueError("exponent must be positive")
    return monomial(1, n) - ONE
