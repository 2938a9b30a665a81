"""Bounds on the order of a d-regular induced subgraph.

Spectral bounds: v(d-sigma)/(k-sigma) above and v(d-rho)/(k-rho) below,
kept as exact surds.  Adjacency-polynomial bounds: the largest and
smallest member of

    S_d = { y in {d+1..v} : R(x, y, d) >= 0 for all integers x }

found by scanning y downward from v (upper) and upward from d+1
(lower), one exact polynomial evaluation per y.  Sentinels for an empty
S_d follow the convention rab_upper = 0, rab_lower = v+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from srgbounds.parameters import restricted_eigenvalues
from srgbounds.polynomials import cap_eval
from srgbounds.surd import QuadraticSurd

__all__ = [
    "BoundSet",
    "haemers_upper",
    "haemers_lower",
    "haemers_clamped",
    "rab_upper",
    "rab_lower",
    "bound_set",
    "divisibility_refine",
    "delsarte_clique_bound",
    "cab",
    "cab_spectral_root",
]


def _check_d(p, d):
    if not 0 <= d <= p.k:
        raise ValueError(f"d={d} out of range 0..k for {p}")


def haemers_upper(p, d):
    """Exact surd value of v(d-sigma)/(k-sigma)."""
    _check_d(p, d)
    sigma = restricted_eigenvalues(p).sigma
    return (p.v * (d - sigma)) / (p.k - sigma)


def haemers_lower(p, d):
    """Exact surd value of v(d-rho)/(k-rho); may be negative."""
    _check_d(p, d)
    rho = restricted_eigenvalues(p).rho
    if rho == p.k:
        raise ValueError(f"{p} is imprimitive (k = rho); lower bound undefined")
    return (p.v * (d - rho)) / (p.k - rho)


def haemers_clamped(p, d):
    """(min(floor(upper), v), max(ceil(lower), d+1)) via exact surd rounding."""
    up = haemers_upper(p, d).floor()
    lo = haemers_lower(p, d).ceil()
    return min(up, p.v), max(lo, d + 1)


def rab_upper(p, d):
    """max(S_d), or 0 when S_d is empty.

    Scans y from v downward with early exit.  The membership test is the
    single-point check of rap_nonneg_all_integers, inlined in integer
    arithmetic because parameter sweeps spend nearly all their time here.
    """
    _check_d(p, d)
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    if d == k:
        return v  # R(x, v, k) vanishes identically
    c1 = lam - mu + 1
    kd = k - d
    dd = d * d
    y = v - 1
    while y > d:
        m = v - y
        x = (y * kd + m - 1) // m - 1
        if (x * (x + 1) * m - 2 * x * y * k + (2 * x + c1) * y * d
                + y * (y - 1) * mu - y * dd) >= 0:
            return y
        y -= 1
    return 0


def rab_lower(p, d):
    """min(S_d), or v+1 when S_d is empty.  Scans y upward from d+1."""
    _check_d(p, d)
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    c1 = lam - mu + 1
    kd = k - d
    dd = d * d
    y = d + 1
    while y < v:
        m = v - y
        x = (y * kd + m - 1) // m - 1
        if (x * (x + 1) * m - 2 * x * y * k + (2 * x + c1) * y * d
                + y * (y - 1) * mu - y * dd) >= 0:
            return y
        y += 1
    return v if d == k else v + 1


@dataclass(frozen=True)
class BoundSet:
    haem_upper: QuadraticSurd
    haem_lower: QuadraticSurd
    haem_upper_clamped: int
    haem_lower_clamped: int
    rab_upper: int
    rab_lower: int
    sd_empty: bool


def bound_set(p, d):
    """All bounds for a primitive tuple at one d, as a single record."""
    hu = haemers_upper(p, d)
    hl = haemers_lower(p, d)
    huc, hlc = min(hu.floor(), p.v), max(hl.ceil(), d + 1)
    ru = rab_upper(p, d)
    rl = rab_lower(p, d)
    return BoundSet(
        haem_upper=hu,
        haem_lower=hl,
        haem_upper_clamped=huc,
        haem_lower_clamped=hlc,
        rab_upper=ru,
        rab_lower=rl,
        sd_empty=(ru == 0),
    )


def divisibility_refine(bound, d, direction):
    """Refine a bound using: a d-regular graph of order y has yd even."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if direction not in ("upper", "lower"):
        raise ValueError(f"direction must be 'upper' or 'lower', got {direction!r}")
    y = bound
    step = -1 if direction == "upper" else 1
    while (y * d) % 2:
        y += step
    return y


def delsarte_clique_bound(p):
    """floor(1 - k/sigma), the classical clique bound."""
    sigma = restricted_eigenvalues(p).sigma
    return (1 - p.k / sigma).floor()


def _cap_negative_somewhere(v, k, lam, y):
    """Whether C(m, y) < 0 for some integer m, y <= v."""
    if y == v:
        # affine in x with slope 2v(v-k-1) > 0 for non-complete graphs
        slope = -2 * v * (k - v + 1)
        const = v * (v - 1) * (lam - v + 2)
        return slope != 0 or const < 0
    # nearest integer to the critical point, checked with a +-1 safety window
    num, den = y * (k - y + 1), v - y
    x0 = -((-num) // den) - 1  # ceil(num/den) - 1, any sign
    return any(cap_eval(v, k, lam, x, y) < 0 for x in (x0 - 1, x0, x0 + 1))


def cab(v, k, lam):
    """Clique adjacency bound: least y >= 2 with C(m, y+1) < 0 for some integer m."""
    if not (v > k >= 1 and lam >= 0):
        raise ValueError(f"not an edge-regular triple: ({v},{k},{lam})")
    for y in range(2, v):
        if _cap_negative_somewhere(v, k, lam, y + 1):
            return y
    raise AssertionError(f"no violation found up to y=v for ({v},{k},{lam})")


def cab_spectral_root(v, k, lam):
    """s+1, where s is the largest root of (v-2k+lam)z^2 + (k^2-k+lam-v*lam)z - k(v-k-1).

    This value dominates the clique adjacency bound.  When the leading
    coefficient vanishes the quadratic degenerates to an affine function
    and its single root is used.
    """
    if not (v > k >= 1 and lam >= 0):
        raise ValueError(f"not an edge-regular triple: ({v},{k},{lam})")
    a = v - 2 * k + lam
    b = k * k - k + lam - v * lam
    c = -k * (v - k - 1)
    if a == 0:
        if b == 0:
            raise ValueError(f"degenerate zero polynomial for ({v},{k},{lam})")
        return QuadraticSurd(-c, 0, b) + 1
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError(f"complex roots for ({v},{k},{lam})")
    # largest root: sign of the leading coefficient picks the branch
    root = QuadraticSurd(-b, 1 if a > 0 else -1, 2 * a, disc)
    return root + 1
