"""Sufficient conditions for the adjacency bound to beat the spectral bound.

For conference ("type I") tuples the tests compare t = frac(-sigma)
against window endpoints mixing sqrt(v) and sqrt(4v-8d+5); every window
inequality is decided exactly, and an undecidable sign yields an
"unproven" verdict rather than a guess.  For integer-eigenvalue
("type II") tuples everything is rational and the single fractional-part
inequality

    0 < frac(h_d) < ((k-sigma) - (d-sigma)(rho-sigma)) / mu

suffices, where h_d is the spectral upper bound.  Each verdict also
carries the directly computed comparison of the two bounds, so a
predicate can never silently overclaim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from srgbounds.bounds import cab, delsarte_clique_bound, haemers_clamped, rab_upper
from srgbounds.parameters import SrgParams, classify_type, restricted_eigenvalues
from srgbounds.surd import QuadraticSurd, SurdSum, decide_sign

__all__ = [
    "StrictnessVerdict",
    "type1_window_1",
    "type1_window_2",
    "type1_window_3",
    "type2_x_stable",
    "type2_strict",
    "cab_strict",
    "paley_params",
    "cy1_params",
    "witness_search",
    "is_prime",
    "is_prime_power",
]


@dataclass(frozen=True)
class StrictnessVerdict:
    predicate_holds: bool | None   # None: a window sign was undecidable
    verified_strict: bool
    window: str


def _strict_upper_holds(p, d):
    return rab_upper(p, d) < haemers_clamped(p, d)[0]


def _tri_and(*signs):
    """Three-valued AND over exact signs: each conjunct wants sign > 0.

    A sign of 0 means a window endpoint is hit exactly; the paper's
    inequalities are strict, so that counts as False.
    """
    if any(s is not None and s <= 0 for s in signs):
        return False
    if any(s is None for s in signs):
        return None
    return True


def _conference_frac_sigma(p, d):
    """(t, sigma) for a strict type I tuple, validating preconditions."""
    if classify_type(p) != "type_I_only":
        raise ValueError(f"{p} is not a type I tuple with irrational eigenvalues")
    sigma = restricted_eigenvalues(p).sigma
    if not QuadraticSurd.from_rational(d) < -sigma:
        raise ValueError(f"window predicates require d < -sigma, got d={d} for {p}")
    if d < 0:
        raise ValueError("d must be non-negative")
    return (-sigma).frac(), sigma


def _inv_sqrtv_plus_1(v, d):
    """d/(sqrt(v)+1) = d(sqrt(v)-1)/(v-1) as an exact surd."""
    return QuadraticSurd(-d, d, v - 1, v)


def _upper_tail(v, d, shift_num, shift_den):
    """shift + (sqrt(v) - sqrt(v-2d+5/4))/2 as SurdSum terms.

    sqrt(v-2d+5/4) = sqrt(4v-8d+5)/2 keeps an integer radicand.
    """
    return [
        QuadraticSurd(shift_num, 0, shift_den),
        QuadraticSurd(0, 1, 2, v),
        QuadraticSurd(0, -1, 4, 4 * v - 8 * d + 5),
    ]


def _window_text(t, los, his):
    lo = SurdSum(los).approx_str() if los else "-inf"
    hi = SurdSum(his).approx_str() if his else "+inf"
    return f"frac(-sigma)={t.approx_str()} tested against ({lo}, {hi})"


def type1_window_1(p, d):
    """1/2 + d/(sqrt(v)+1) < frac(-sigma) < 3/4 + (sqrt(v)-sqrt(v-2d+5/4))/2."""
    t, _ = _conference_frac_sigma(p, d)
    v = p.v
    lo_terms = [QuadraticSurd(1, 0, 2), _inv_sqrtv_plus_1(v, d)]
    hi_terms = _upper_tail(v, d, 3, 4)
    s_lo = decide_sign(SurdSum([t] + [-x for x in lo_terms]))
    s_hi = decide_sign(SurdSum(hi_terms + [-t]))
    return StrictnessVerdict(
        predicate_holds=_tri_and(s_lo, s_hi),
        verified_strict=_strict_upper_holds(p, d),
        window=_window_text(t, lo_terms, hi_terms),
    )


def type1_window_2(p, d):
    """frac(-sigma) < min(d/(sqrt(v)+1), -1/4 + (sqrt(v)-sqrt(v-2d+5/4))/2); sigma < -2."""
    t, sigma = _conference_frac_sigma(p, d)
    if not sigma < -2:
        raise ValueError(f"window 2 requires sigma < -2, got {p}")
    v = p.v
    hi1 = [_inv_sqrtv_plus_1(v, d)]
    hi2 = _upper_tail(v, d, -1, 4)
    s1 = decide_sign(SurdSum(hi1 + [-t]))
    s2 = decide_sign(SurdSum(hi2 + [-t]))
    return StrictnessVerdict(
        predicate_holds=_tri_and(s1, s2),
        verified_strict=_strict_upper_holds(p, d),
        window=_window_text(t, [], hi1) + " and " + _window_text(t, [], hi2),
    )


def type1_window_3(p, d):
    """d/(sqrt(v)+1) < frac(-sigma) < min(1/2 + d/(sqrt(v)+1), -1/4 + ...); sigma < -3."""
    t, sigma = _conference_frac_sigma(p, d)
    if not sigma < -3:
        raise ValueError(f"window 3 requires sigma < -3, got {p}")
    v = p.v
    lo = [_inv_sqrtv_plus_1(v, d)]
    hi1 = [QuadraticSurd(1, 0, 2), _inv_sqrtv_plus_1(v, d)]
    hi2 = _upper_tail(v, d, -1, 4)
    s_lo = decide_sign(SurdSum([t] + [-x for x in lo]))
    s1 = decide_sign(SurdSum(hi1 + [-t]))
    s2 = decide_sign(SurdSum(hi2 + [-t]))
    return StrictnessVerdict(
        predicate_holds=_tri_and(s_lo, s1, s2),
        verified_strict=_strict_upper_holds(p, d),
        window=_window_text(t, lo, hi1) + " and " + _window_text(t, [], hi2),
    )


def _type2_data(p, d):
    if classify_type(p) not in ("type_II_only", "both"):
        raise ValueError(f"{p} does not have integer eigenvalues")
    if not 0 <= d <= p.k:
        raise ValueError(f"d={d} out of range 0..k for {p}")
    ev = restricted_eigenvalues(p)
    rho = int(ev.rho.as_fraction())
    sigma = int(ev.sigma.as_fraction())
    h_d = Fraction(p.v * (d - sigma), p.k - sigma)
    return rho, sigma, h_d


def type2_x_stable(p, d):
    """Whether the critical integer at floor(h_d) equals the one at h_d.

    True iff frac(h_d) < v(k-d) / ((k-sigma)(k-sigma-1)); pure rational
    arithmetic since both eigenvalues are integers.
    """
    _, sigma, h_d = _type2_data(p, d)
    frac = h_d - (h_d.numerator // h_d.denominator)
    bound = Fraction(p.v * (p.k - d), (p.k - sigma) * (p.k - sigma - 1))
    return frac < bound


def type2_strict(p, d):
    """0 < frac(h_d) < ((k-sigma) - (d-sigma)(rho-sigma))/mu forces a strict win."""
    rho, sigma, h_d = _type2_data(p, d)
    frac = h_d - (h_d.numerator // h_d.denominator)
    bound = Fraction((p.k - sigma) - (d - sigma) * (rho - sigma), p.mu)
    return StrictnessVerdict(
        predicate_holds=0 < frac < bound,
        verified_strict=_strict_upper_holds(p, d),
        window=f"frac(h_d)={frac} tested against (0, {bound})",
    )


def cab_strict(p):
    """Clique bound vs Delsarte: 0 < frac(-k/sigma) < 1 - rho(rho+1)/(v-2k+lam).

    For type II tuples with v-2k+lam > 0 this is an exact criterion:
    the predicate holds if and only if CAB < floor(1 - k/sigma).
    """
    if not p.is_primitive:
        raise ValueError(f"{p} is imprimitive")
    rho, sigma, _ = _type2_data(p, 0)
    denom = p.v - 2 * p.k + p.lam
    if denom <= 0:
        raise ValueError(f"degenerate denominator v-2k+lambda={denom} for {p}")
    frac = Fraction(-p.k, sigma) % 1
    bound = 1 - Fraction(rho * (rho + 1), denom)
    return StrictnessVerdict(
        predicate_holds=0 < frac < bound,
        verified_strict=cab(p.v, p.k, p.lam) < delsarte_clique_bound(p),
        window=f"frac(-k/sigma)={frac} tested against (0, {bound})",
    )


# -- parameter families and witness search -----------------------------------

def paley_params(q):
    """(q, (q-1)/2, (q-5)/4, (q-1)/4), defined for q = 1 (mod 4)."""
    if q % 4 != 1:
        raise ValueError(f"q={q} is not 1 mod 4")
    return SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)


def cy1_params(q):
    """The q^4-vertex family with eigenvalues rho=(q-1)^2, sigma=1-2q."""
    if q < 2:
        raise ValueError(f"q={q} must be at least 2")
    rho = (q - 1) ** 2
    sigma = 1 - 2 * q
    mu = rho * (rho + 1)
    return SrgParams(q ** 4, rho * (q * q + 1), mu + rho + sigma, mu)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_power(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1 if p == 2 else 2
    return True  # n itself prime


def _paley_combined_verdict(p, d):
    """Best verdict over the applicable type I windows."""
    sigma = restricted_eigenvalues(p).sigma
    if not QuadraticSurd.from_rational(d) < -sigma:
        return StrictnessVerdict(
            predicate_holds=False,
            verified_strict=_strict_upper_holds(p, d),
            window="no window applicable (d >= -sigma)",
        )
    verdicts = [type1_window_1(p, d)]
    if sigma < -2:
        verdicts.append(type1_window_2(p, d))
    if sigma < -3:
        verdicts.append(type1_window_3(p, d))
    for w in verdicts:
        if w.predicate_holds:
            return w
    holds = None if any(w.predicate_holds is None for w in verdicts) else False
    return StrictnessVerdict(
        predicate_holds=holds,
        verified_strict=verdicts[0].verified_strict,
        window="; ".join(w.window for w in verdicts),
    )


def witness_search(family, d, qmax):
    """Scan a parameter family for strict-improvement witnesses.

    family "paley": primes q = 1 (mod 4) up to qmax, type I windows.
    family "cy1":   prime powers q up to qmax, the type II criterion.
    Every verdict carries verified_strict from direct bound computation.
    """
    if d < 0 or qmax < 5:
        raise ValueError("need d >= 0 and qmax >= 5")
    out = []
    if family == "paley":
        for q in range(5, qmax + 1, 4):
            if not is_prime(q):
                continue
            out.append((q, _paley_combined_verdict(paley_params(q), d)))
    elif family == "cy1":
        for q in range(2, qmax + 1):
            if not is_prime_power(q):
                continue
            p = cy1_params(q)
            if d > p.k:
                continue
            out.append((q, type2_strict(p, d)))
    else:
        raise ValueError(f"unknown family {family!r}")
    return out
