"""Strongly regular graph parameter tuples and their feasibility.

A tuple (v, k, lambda, mu) determines the restricted eigenvalues
rho > sigma as the roots of x^2 - (lambda-mu)x - (k-mu), i.e.
((lambda-mu) +- sqrt(disc))/2 with disc = (lambda-mu)^2 + 4(k-mu).
Conference tuples (4n+1, 2n, n-1, n) are the only ones allowed
irrational eigenvalues; everything else must have a square
discriminant to be feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from srgbounds.surd import QuadraticSurd

__all__ = [
    "SrgParams",
    "Eigenvalues",
    "FeasibilityReport",
    "LEVELS",
    "restricted_eigenvalues",
    "classify_type",
    "type_label",
    "complement",
    "multiplicities",
    "is_feasible",
    "enumerate_feasible",
]

LEVELS = ("basic", "integrality", "krein", "absolute")


@dataclass(frozen=True, order=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.v < 1 or not 0 < self.k < self.v:
            raise ValueError(f"degree out of range: {self}")
        if not 0 <= self.lam < self.k:
            raise ValueError(f"lambda out of range: {self}")
        if not 0 <= self.mu <= self.k:
            raise ValueError(f"mu out of range: {self}")

    @classmethod
    def parse(cls, text):
        """Parse the tuple text form "v,k,lambda,mu"."""
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated integers, got {text!r}")
        return cls(*parts)

    def __str__(self):
        return f"{self.v},{self.k},{self.lam},{self.mu}"

    @property
    def is_primitive(self):
        return self.mu not in (0, self.k)

    @property
    def basic_identity_holds(self):
        return self.mu * (self.v - self.k - 1) == self.k * (self.k - self.lam - 1)

    @property
    def discriminant(self):
        d = self.lam - self.mu
        return d * d + 4 * (self.k - self.mu)

    @property
    def is_conference(self):
        n, r = divmod(self.k, 2)
        return (r == 0 and n >= 1
                and (self.v, self.lam, self.mu) == (4 * n + 1, n - 1, n))


@dataclass(frozen=True)
class Eigenvalues:
    rho: QuadraticSurd
    sigma: QuadraticSurd
    discriminant: int


def restricted_eigenvalues(p):
    """Eigenvalues rho >= 0 > sigma of any graph with parameters p."""
    if not p.basic_identity_holds:
        raise ValueError(f"basic identity fails for {p}")
    disc = p.discriminant
    t = p.lam - p.mu
    rho = QuadraticSurd(t, 1, 2, disc)
    sigma = QuadraticSurd(t, -1, 2, disc)
    assert rho >= 0 and sigma <= -1
    return Eigenvalues(rho, sigma, disc)


def classify_type(p):
    """"type_I_only", "type_II_only" or "both".

    Type I tuples are the conference tuples (4n+1, 2n, n-1, n); type II
    tuples have integer eigenvalues (square discriminant).  A tuple that
    is neither cannot belong to any strongly regular graph.
    """
    conference = p.is_conference
    disc = p.discriminant
    square = isqrt(disc) ** 2 == disc
    if conference and square:
        return "both"
    if conference:
        return "type_I_only"
    if square:
        return "type_II_only"
    raise ValueError(
        f"{p} is neither a conference tuple nor has integer eigenvalues; infeasible"
    )


def type_label(p):
    """Short classification label for reports: I, II, I+II, or none."""
    try:
        return {"type_I_only": "I", "type_II_only": "II", "both": "I+II"}[classify_type(p)]
    except ValueError:
        return "none"


def complement(p):
    """Parameters of the complement graph; eigenvalues map to -1-sigma > -1-rho."""
    if not p.basic_identity_holds:
        raise ValueError(f"basic identity fails for {p}")
    v = p.v
    kc = v - p.k - 1
    lamc = v - 2 - 2 * p.k + p.mu
    muc = v - 2 * p.k + p.lam
    if lamc < 0 or muc < 0:
        raise ValueError(f"complement of {p} has negative parameters; input infeasible")
    return SrgParams(v, kc, lamc, muc)


def multiplicities(p):
    """Multiplicities (f, g) of rho and sigma.

    Conference tuples split evenly into ((v-1)/2, (v-1)/2); for type II
    tuples f, g = ((v-1) -+ (2k + (v-1)(lambda-mu))/(rho-sigma))/2 and a
    non-integer value signals an infeasible tuple.
    """
    if p.is_conference:
        return (p.v - 1) // 2, (p.v - 1) // 2
    disc = p.discriminant
    s = isqrt(disc)
    if s * s != disc:
        raise ValueError(f"{p}: irrational eigenvalues on a non-conference tuple")
    num = 2 * p.k + (p.v - 1) * (p.lam - p.mu)
    if num % s:
        raise ValueError(f"{p}: non-integer multiplicities")
    q = num // s
    if (p.v - 1 - q) % 2:
        raise ValueError(f"{p}: non-integer multiplicities")
    f = (p.v - 1 - q) // 2
    g = (p.v - 1 + q) // 2
    if f <= 0 or g <= 0:
        raise ValueError(f"{p}: non-positive multiplicities")
    return f, g


@dataclass(frozen=True)
class FeasibilityReport:
    params: SrgParams
    basic_identity: bool
    multiplicity_integrality: bool
    krein1: bool
    krein2: bool
    absolute1: bool
    absolute2: bool
    primitive: bool

    @property
    def krein(self):
        return self.krein1 and self.krein2

    @property
    def absolute_bound(self):
        return self.absolute1 and self.absolute2

    def passes(self, level):
        if level not in LEVELS:
            raise ValueError(f"unknown level {level!r}")
        ok = self.basic_identity
        if level == "basic":
            return ok
        ok = ok and self.multiplicity_integrality
        if level == "integrality":
            return ok
        ok = ok and self.krein
        if level == "krein":
            return ok
        return ok and self.absolute_bound

    def failures(self, level):
        names = []
        checks = [("basic_identity", self.basic_identity)]
        if level != "basic":
            checks.append(("multiplicity_integrality", self.multiplicity_integrality))
        if level in ("krein", "absolute"):
            checks += [("krein1", self.krein1), ("krein2", self.krein2)]
        if level == "absolute":
            checks += [("absolute1", self.absolute1), ("absolute2", self.absolute2)]
        for name, ok in checks:
            if not ok:
                names.append(name)
        return names


def is_feasible(p, level="absolute"):
    """Run the arithmetic feasibility battery up to `level`.

    basic       parameter identity mu(v-k-1) = k(k-lambda-1) plus range
                checks (non-complete: k <= v-2)
    integrality basic + integer eigenvalue multiplicities (conference
                tuples exempt)
    krein       integrality + both Krein conditions
    absolute    krein + v <= f(f+3)/2 and v <= g(g+3)/2 (primitive
                tuples only; the bound does not apply to imprimitive ones)

    Failures are recorded in the report, never raised.  The battery is
    arithmetic only: no nonexistence results from classifications or
    curated tables are consulted.
    """
    basic = p.basic_identity_holds and p.k <= p.v - 2
    integrality = krein1 = krein2 = absolute1 = absolute2 = False
    if basic:
        if p.is_conference:
            integrality = True
        else:
            try:
                multiplicities(p)
                integrality = True
            except ValueError:
                integrality = False
    if integrality:
        ev = restricted_eigenvalues(p)
        rho, sigma, k = ev.rho, ev.sigma, p.k
        # (rho+1)(k+rho+2 rho sigma) <= (k+rho)(sigma+1)^2 and the mirror
        lhs1 = (rho + 1) * (k + rho + 2 * rho * sigma)
        rhs1 = (k + rho) * (sigma + 1) * (sigma + 1)
        krein1 = lhs1 <= rhs1
        lhs2 = (sigma + 1) * (k + sigma + 2 * rho * sigma)
        rhs2 = (k + sigma) * (rho + 1) * (rho + 1)
        krein2 = lhs2 <= rhs2
    if integrality and krein1 and krein2:
        if p.is_primitive:
            f, g = multiplicities(p)
            absolute1 = 2 * p.v <= f * (f + 3)
            absolute2 = 2 * p.v <= g * (g + 3)
        else:
            absolute1 = absolute2 = True
    return FeasibilityReport(
        params=p,
        basic_identity=basic,
        multiplicity_integrality=integrality,
        krein1=krein1,
        krein2=krein2,
        absolute1=absolute1,
        absolute2=absolute2,
        primitive=p.is_primitive,
    )


def enumerate_feasible(vmax, level="krein", primitive_only=True):
    """All tuples with 5 <= v <= vmax passing the battery at `level`.

    Iterates v, then k, then solves mu from the basic identity: mu must
    be a multiple of k/gcd(k, v-k-1), giving O(gcd) candidates per (v, k)
    instead of a full lambda scan.  Output is sorted by (v, k, lam, mu).
    """
    if vmax < 5:
        return []
    out = []
    for v in range(5, vmax + 1):
        for k in range(1, v - 1):
            m = v - k - 1
            step = k // gcd(k, m)
            for mu in range(0, k + 1, step):
                lam = k - 1 - mu * m // k
                if lam < 0:
                    break
                if primitive_only and mu in (0, k):
                    continue
                p = SrgParams(v, k, lam, mu)
                if is_feasible(p, level).passes(level):
                    out.append(p)
    out.sort()
    return out
