"""Spectral and adjacency-polynomial bounds, clamps, CAB."""

from fractions import Fraction

import pytest

from srgbounds.bounds import (
    bound_set,
    cab,
    cab_spectral_root,
    delsarte_clique_bound,
    divisibility_refine,
    haemers_clamped,
    haemers_lower,
    haemers_upper,
    rab_lower,
    rab_upper,
)
from srgbounds.parameters import SrgParams, complement, enumerate_feasible
from srgbounds.polynomials import cap_eval, rap_nonneg_all_integers

P = SrgParams


def test_haemers_upper_examples():
    assert haemers_upper(P(16, 6, 2, 2), 4) == 12
    assert haemers_upper(P(10, 3, 0, 1), 0) == 4
    for p in (P(10, 3, 0, 1), P(13, 6, 2, 3), P(41, 20, 9, 10)):
        assert haemers_upper(p, p.k) == p.v
    with pytest.raises(ValueError):
        haemers_upper(P(10, 3, 0, 1), 4)


def test_haemers_lower_examples():
    assert haemers_lower(P(16, 6, 2, 2), 4) == 8
    assert haemers_lower(P(10, 3, 0, 1), 0) == -5
    for p in (P(10, 3, 0, 1), P(13, 6, 2, 3)):
        assert haemers_lower(p, p.k) == p.v
    with pytest.raises(ValueError):
        haemers_lower(P(10, 4, 3, 0), 0)  # k = rho, imprimitive


def test_haemers_clamped_examples():
    assert haemers_clamped(P(41, 20, 9, 10), 1)[0] == 8   # exact floor of ~8.133
    assert haemers_clamped(P(10, 3, 0, 1), 0)[1] == 1     # max(ceil(-5), 1)
    assert haemers_clamped(P(16, 6, 2, 2), 6) == (16, 16)
    assert haemers_clamped(P(16, 6, 2, 2), 4) == (12, 8)


def test_rab_upper_examples():
    assert rab_upper(P(41, 20, 9, 10), 1) == 7
    assert rab_upper(P(10, 3, 0, 1), 0) == 4
    for p in (P(10, 3, 0, 1), P(16, 6, 2, 2), P(41, 20, 9, 10)):
        assert rab_upper(p, p.k) == p.v


def test_rab_lower_examples():
    assert rab_lower(P(16, 6, 2, 2), 4) == 8
    assert rab_lower(P(10, 3, 0, 1), 0) == 1
    # d = k: S_k = {v}, so the lower bound is v as well
    assert rab_lower(P(10, 3, 0, 1), 3) == 10
    assert rab_lower(P(10, 3, 0, 1), 2) == 5


def reference_rab(p, d):
    """Scan using the public membership test instead of the inlined loop."""
    upper = 0
    for y in range(p.v, d, -1):
        if rap_nonneg_all_integers(p, y, d):
            upper = y
            break
    lower = p.v + 1
    for y in range(d + 1, p.v + 1):
        if rap_nonneg_all_integers(p, y, d):
            lower = y
            break
    return upper, lower


def test_scans_match_reference_membership_test():
    for p in enumerate_feasible(40, "krein", True):
        for d in range(0, p.k + 1):
            assert (rab_upper(p, d), rab_lower(p, d)) == reference_rab(p, d)


def test_divisibility_refine_examples():
    assert divisibility_refine(7, 1, "upper") == 6
    assert divisibility_refine(8, 2, "upper") == 8
    assert divisibility_refine(5, 3, "lower") == 6
    assert divisibility_refine(0, 3, "upper") == 0
    with pytest.raises(ValueError):
        divisibility_refine(-1, 1, "upper")
    with pytest.raises(ValueError):
        divisibility_refine(5, 1, "sideways")


def brute_force_cab(v, k, lam):
    """Oracle: scan a wide integer window for a violating m at each y."""
    for y in range(2, v):
        if y + 1 == v:
            vals = [cap_eval(v, k, lam, m, y + 1) for m in range(-2 * v, 2 * v + 1)]
        else:
            vals = [cap_eval(v, k, lam, m, y + 1) for m in range(-2 * v - 2 * k, 2 * v + 2 * k + 1)]
        if min(vals) < 0:
            return y
    raise AssertionError("no CAB found")


def test_cab_examples():
    assert cab(10, 3, 0) == 2
    assert cab(16, 6, 2) == 4
    assert cab(13, 6, 2) == 3
    for (v, k, lam) in ((10, 3, 0), (16, 6, 2), (13, 6, 2), (41, 20, 9), (25, 12, 5)):
        assert cab(v, k, lam) == brute_force_cab(v, k, lam)


def test_cab_spectral_root_examples():
    assert cab_spectral_root(10, 3, 0) == Fraction(5, 2)   # 4z^2+6z-18, root 3/2
    assert cab_spectral_root(16, 6, 2) == 4                # 6z^2-54, root 3
    assert cab_spectral_root(6, 4, 2) == 3                 # affine 2z-4, root 2


def test_theorem_inequalities_and_fixpoint():
    """rab_upper <= clamped Haemers upper and rab_lower >= clamped lower."""
    for p in enumerate_feasible(60, "krein", True):
        for d in range(0, p.k + 1):
            bs = bound_set(p, d)
            assert bs.rab_upper <= bs.haem_upper_clamped, (p, d)
            assert bs.rab_lower >= bs.haem_lower_clamped, (p, d)
            assert bs.sd_empty == (bs.rab_upper == 0 and bs.rab_lower == p.v + 1)
        assert rab_upper(p, p.k) == p.v
        assert haemers_upper(p, p.k) == p.v
        assert haemers_lower(p, p.k) == p.v


def test_cab_duality_and_caps():
    for p in enumerate_feasible(60, "krein", True):
        c = cab(p.v, p.k, p.lam)
        assert c == rab_upper(complement(p), 0), p
        assert c <= delsarte_clique_bound(p), p
        assert c <= cab_spectral_root(p.v, p.k, p.lam).floor(), p


def test_haemers_upper_strictly_increasing_in_d():
    for p in (P(10, 3, 0, 1), P(13, 6, 2, 3), P(41, 20, 9, 10), P(16, 5, 0, 2)):
        vals = [haemers_upper(p, d) for d in range(0, p.k + 1)]
        for a, b in zip(vals, vals[1:]):
            assert a < b
