"""Regular adjacency and clique adjacency polynomials.

For parameters (v, k, lambda, mu) the regular adjacency polynomial is

    R(x, y, d) = x(x+1)(v-y) - 2xyk + (2x+lambda-mu+1)yd + y(y-1)mu - yd^2

and a d-regular induced subgraph of order y >= 2 forces R(m, y, d) >= 0
at every integer m.  The clique adjacency polynomial of an edge-regular
triple (v, k, lambda) is

    C(x, y) = (v-y)x(x+1) - 2xy(k-y+1) + y(y-1)(lambda-y+2).

Both accept rational (not just integer) arguments so the polynomial
identities behind the bound comparisons can be checked exactly at
half-integer points.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "rap_eval",
    "cap_eval",
    "critical_x",
    "nearest_int",
    "rap_nonneg_all_integers",
]


def rap_eval(p, x, y, d):
    """Exact value of the regular adjacency polynomial at (x, y, d)."""
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    return (x * (x + 1) * (v - y) - 2 * x * y * k
            + (2 * x + lam - mu + 1) * y * d + y * (y - 1) * mu - y * d * d)


def cap_eval(v, k, lam, x, y):
    """Exact value of the clique adjacency polynomial at (x, y)."""
    if not (v > k >= 1 and lam >= 0):
        raise ValueError(f"not an edge-regular triple: ({v},{k},{lam})")
    return ((v - y) * x * (x + 1) - 2 * x * y * (k - y + 1)
            + y * (y - 1) * (lam - y + 2))


def critical_x(p, y, d):
    """Minimiser x_y of R(x, y, d) as a quadratic in x, for 0 < y < v."""
    if y <= 0 or y >= p.v:
        raise ValueError(f"critical point needs 0 < y < v, got y={y}")
    return Fraction(2 * y * (p.k - d) - (p.v - y), 2 * (p.v - y))


def nearest_int(r):
    """Smallest nearest integer ceil(r - 1/2); half-integers round down."""
    f = Fraction(r)
    num, den = f.numerator * 2 - f.denominator, f.denominator * 2
    return -((-num) // den)  # ceil(num/den)


def rap_nonneg_all_integers(p, y, d):
    """Whether R(x, y, d) >= 0 at every integer x.

    For y < v the quadratic in x has positive leading coefficient and is
    negative at some integer iff it is negative at the integer nearest
    its critical point, so a single evaluation decides.  For y = v the
    polynomial is affine in x: non-negative everywhere iff the slope
    2v(d-k) vanishes and the constant term is >= 0 (exactly the case
    d = k, where it is identically zero).
    """
    if not (d + 1 <= y <= p.v and 0 <= d <= p.k):
        raise ValueError(f"membership test needs d+1 <= y <= v, 0 <= d <= k")
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    if y == v:
        slope = 2 * v * (d - k)
        const = (lam - mu + 1) * v * d + v * (v - 1) * mu - v * d * d
        return slope == 0 and const >= 0
    # [x_y] = ceil(y(k-d)/(v-y)) - 1, since x_y - 1/2 = y(k-d)/(v-y) - 1
    m = v - y
    x = (y * (k - d) + m - 1) // m - 1
    return rap_eval(p, x, y, d) >= 0
