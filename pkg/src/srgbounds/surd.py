"""Exact arithmetic for quadratic irrationals.

A QuadraticSurd stores the value (a + b*sqrt(D))/c with integers a, b,
c > 0, D >= 0.  All arithmetic, floor, fractional part and comparison
are decided with integer arithmetic only; nothing is ever rounded.
Python ints are arbitrary precision, so products of bound comparisons
(up to ~v^4 and their squares) can never overflow.

Sums mixing different radicands (e.g. sqrt(v) and sqrt(4v-8d+5)) are
handled by SurdSum, whose sign is decided by shrinking rational
interval enclosures; an exact zero is recognised by grouping terms
whose radicands share a square-free part.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "isqrt",
    "QuadraticSurd",
    "SurdSum",
    "surd_floor",
    "surd_frac",
    "surd_compare",
    "decide_sign",
    "UndecidableSign",
]

# Refinement cap for interval sign decisions: scales 10^1 .. 10^SIGN_SCALES.
# Differences of a handful of surds with small radicands either cancel
# exactly (detected algebraically) or are separated from 0 far sooner.
SIGN_SCALES = 64


class UndecidableSign(Exception):
    """Sign of a surd sum could not be certified within the scale cap."""


def _square_free_split(n):
    """Return (m, s) with n = m*m*s and s square-free (n >= 0)."""
    if n == 0:
        return 0, 0
    m, s = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    return m, s * n


def _cmp_int_vs_bsqrt(m, b, D):
    """Exact sign of m - b*sqrt(D) using sign-aware squaring."""
    if b == 0:
        return (m > 0) - (m < 0)
    if b > 0:
        if m <= 0:
            return -1
        lhs, rhs = m * m, b * b * D
        return (lhs > rhs) - (lhs < rhs)
    # b < 0: b*sqrt(D) <= 0
    if m >= 0:
        return 1 if m > 0 or D > 0 else 0
    lhs, rhs = b * b * D, m * m
    return (lhs > rhs) - (lhs < rhs)


class QuadraticSurd:
    """Exact value (a + b*sqrt(D))/c, immutable after construction.

    Normalisation: c > 0, gcd(a, b, c) = 1, and a perfect-square D is
    folded into the rational part (then b = 0 and D = 0).  D is not
    reduced to square-free form.
    """

    __slots__ = ("a", "b", "c", "D")

    def __init__(self, a, b=0, c=1, D=0):
        if c == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if D < 0:
            raise ValueError("negative radicand")
        if c < 0:
            a, b, c = -a, -b, -c
        if b == 0:
            D = 0
        elif D == 0:
            b = 0
        else:
            r = isqrt(D)
            if r * r == D:
                a, b, D = a + b * r, 0, 0
        g = gcd(gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticSurd is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_rational(cls, value):
        f = Fraction(value)
        return cls(f.numerator, 0, f.denominator, 0)

    @classmethod
    def sqrt(cls, n):
        if n < 0:
            raise ValueError("negative radicand")
        return cls(0, 1, 1, n)

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self):
        return self.b == 0

    @property
    def is_integer(self):
        return self.b == 0 and self.c == 1

    def as_fraction(self):
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    # -- ring/field arithmetic (one radicand at a time) -------------------

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd.from_rational(other)
        return None

    def _join_radicand(self, other):
        if self.b == 0:
            return other.D
        if other.b == 0 or other.D == self.D:
            return self.D
        raise ValueError(
            f"mixed radicands {self.D} and {other.D}; use SurdSum for sums"
        )

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._join_radicand(o)
        return QuadraticSurd(
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
            D,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._join_radicand(o)
        return QuadraticSurd(
            self.a * o.a + self.b * o.b * D,
            self.a * o.b + self.b * o.a,
            self.c * o.c,
            D,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._join_radicand(o)
        norm = o.a * o.a - o.b * o.b * D
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        # 1/((a2 + b2 r)/c2) = c2 (a2 - b2 r) / (a2^2 - b2^2 D)
        inv = QuadraticSurd(o.c * o.a, -o.c * o.b, norm, D)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- exact order ------------------------------------------------------

    def _sign(self):
        """Exact sign of the value."""
        # sign of a + b*sqrt(D)  (c > 0 does not matter)
        return -_cmp_int_vs_bsqrt(-self.a, self.b, self.D)

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare surd with {type(other).__name__}")
        return (self - o)._sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticSurd.from_rational(other)
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def _canonical(self):
        """(a, B, c, s) with the value (a + B*sqrt(s))/c, s square-free."""
        m, s = _square_free_split(self.D)
        return (self.a, self.b * m, self.c, s)

    # -- floor / ceil / fractional part ------------------------------------

    def floor(self):
        """Unique integer f with f <= self < f + 1, decided exactly.

        Brackets b*sqrt(D) between consecutive integers via isqrt, then
        resolves the one possible off-by-one with an exact comparison.
        """
        a, b, c, D = self.a, self.b, self.c, self.D
        if b == 0:
            return a // c
        if b > 0:
            t = isqrt(b * b * D)
        else:
            r = isqrt(b * b * D)
            t = -r if r * r == b * b * D else -(r + 1)
        q = (a + t) // c
        # value >= q + 1  iff  b*sqrt(D) >= (q+1)c - a
        if _cmp_int_vs_bsqrt((q + 1) * c - a, b, D) <= 0:
            return q + 1
        return q

    def ceil(self):
        return -((-self).floor())

    def frac(self):
        """self - floor(self), in [0, 1)."""
        return self - self.floor()

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        return f"({self.a}+{self.b}*sqrt({self.D}))/{self.c}"

    def __repr__(self):
        return f"QuadraticSurd({self.a}, {self.b}, {self.c}, {self.D})"

    def approx_str(self, digits=6):
        """Decimal rendering rounded (half-up) to `digits` places."""
        scale = 10 ** digits
        n = (self * scale + Fraction(1, 2)).floor()
        sign = "-" if n < 0 else ""
        n = abs(n)
        return f"{sign}{n // scale}.{n % scale:0{digits}d}"


class SurdSum:
    """A finite sum of QuadraticSurd terms, possibly with different radicands.

    Only its exact sign is ever needed; see decide_sign.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        combined = {}
        for t in terms:
            if isinstance(t, (int, Fraction)):
                t = QuadraticSurd.from_rational(t)
            key = t.D if t.b != 0 else 0
            combined[key] = combined[key] + t if key in combined else t
        self.terms = tuple(v for v in combined.values()
                           if not (v.b == 0 and v.a == 0))

    def __neg__(self):
        return SurdSum([-t for t in self.terms])

    def _square_free_groups(self):
        """Coefficients of sqrt(s) per square-free s (s=1 is the rational part)."""
        groups = {}
        for t in self.terms:
            m, s = _square_free_split(t.D)
            if t.b == 0:
                s = 1
            coeff = Fraction(t.b * m, t.c) if s != 1 else Fraction(t.a, t.c)
            groups[s] = groups.get(s, Fraction(0)) + coeff
            if s != 1 and t.a != 0:
                groups[1] = groups.get(1, Fraction(0)) + Fraction(t.a, t.c)
        return {s: v for s, v in groups.items() if v != 0}

    def is_zero(self):
        """True iff the sum cancels exactly (terms pairwise rationalise)."""
        return not self._square_free_groups()

    def interval(self, scale_exp):
        """Rational enclosure [lo, hi] at denominator scale 10**scale_exp."""
        scale = 10 ** scale_exp
        lo = hi = Fraction(0)
        for t in self.terms:
            base = Fraction(t.a, t.c)
            if t.b == 0:
                lo += base
                hi += base
                continue
            r = isqrt(t.b * t.b * t.D * scale * scale)
            frac_lo = Fraction(r, scale) if t.b > 0 else Fraction(-(r + 1), scale)
            frac_hi = frac_lo + Fraction(1, scale)
            lo += base + Fraction(frac_lo, t.c)
            hi += base + Fraction(frac_hi, t.c)
        return lo, hi

    def sign(self):
        """Exact sign, or None when undecided after SIGN_SCALES refinements."""
        if self.is_zero():
            return 0
        for t in range(1, SIGN_SCALES + 1):
            lo, hi = self.interval(t)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
        return None

    def approx_str(self, digits=6):
        lo, hi = self.interval(digits + 4)
        mid = (lo + hi) / 2
        scale = 10 ** digits
        n = (mid * scale).__floor__() + (1 if (mid * scale) % 1 >= Fraction(1, 2) else 0)
        sign = "-" if n < 0 else ""
        n = abs(n)
        return f"{sign}{n // scale}.{n % scale:0{digits}d}"

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


# -- spec-level operation names ---------------------------------------------

def surd_floor(s):
    return s.floor()


def surd_frac(s):
    return s.frac()


def surd_compare(s, r):
    """Exact ordering of a surd against a rational: -1, 0 or +1."""
    if not isinstance(s, QuadraticSurd):
        s = QuadraticSurd.from_rational(s)
    return s._cmp(r)


def decide_sign(expr):
    """Exact sign (-1, 0, +1) of a SurdSum, or None when undecidable.

    None must be treated by callers as "unproven", never as a truth value.
    """
    if isinstance(expr, QuadraticSurd):
        return expr._sign()
    if isinstance(expr, (int, Fraction)):
        v = Fraction(expr)
        return (v > 0) - (v < 0)
    return expr.sign()
