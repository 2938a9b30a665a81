"""Strict-improvement predicates, parameter families, witness search."""

from fractions import Fraction

import pytest

from srgbounds.bounds import cab, delsarte_clique_bound, haemers_clamped, haemers_upper, rab_upper
from srgbounds.parameters import (
    SrgParams,
    classify_type,
    enumerate_feasible,
    restricted_eigenvalues,
)
from srgbounds.polynomials import critical_x, nearest_int, rap_eval
from srgbounds.strictness import (
    cab_strict,
    cy1_params,
    is_prime,
    is_prime_power,
    paley_params,
    type1_window_1,
    type1_window_2,
    type1_window_3,
    type2_strict,
    type2_x_stable,
    witness_search,
)

P = SrgParams


def test_type1_window_1_examples():
    v = type1_window_1(P(17, 8, 3, 4), 0)
    assert v.predicate_holds is True
    assert v.verified_strict is True
    assert rab_upper(P(17, 8, 3, 4), 0) == 3
    assert haemers_clamped(P(17, 8, 3, 4), 0)[0] == 4

    v = type1_window_1(P(13, 6, 2, 3), 0)
    assert v.predicate_holds is False

    # pentagon: frac(-sigma) hits the window's upper endpoint exactly, and
    # the bounds tie; the verdict must agree with the direct computation
    v = type1_window_1(P(5, 2, 0, 1), 0)
    assert v.predicate_holds is False
    assert v.verified_strict is False
    assert rab_upper(P(5, 2, 0, 1), 0) == 2 == haemers_clamped(P(5, 2, 0, 1), 0)[0]

    with pytest.raises(ValueError):
        type1_window_1(P(5, 2, 0, 1), 2)     # d >= -sigma
    with pytest.raises(ValueError):
        type1_window_1(P(16, 6, 2, 2), 0)    # not type I
    with pytest.raises(ValueError):
        type1_window_1(P(25, 12, 5, 6), 0)   # conference but integer eigenvalues


def test_type1_window_2_examples():
    v = type1_window_2(P(29, 14, 6, 7), 2)
    assert v.predicate_holds is False        # min term is negative
    with pytest.raises(ValueError):
        type1_window_2(P(5, 2, 0, 1), 0)     # sigma >= -2
    v = type1_window_2(P(101, 50, 24, 25), 1)
    assert v.predicate_holds is not None
    if v.predicate_holds:
        assert v.verified_strict


def test_type1_window_3_examples():
    for p, d in ((P(53, 26, 12, 13), 1), (P(173, 86, 42, 43), 2)):
        v = type1_window_3(p, d)
        assert v.predicate_holds is not None
        if v.predicate_holds:
            assert v.verified_strict
    with pytest.raises(ValueError):
        type1_window_3(P(13, 6, 2, 3), 0)    # sigma >= -3


def test_type2_x_stable_examples():
    assert type2_x_stable(P(256, 153, 92, 90), 0) is True
    assert type2_x_stable(P(16, 5, 0, 2), 0) is True
    assert type2_x_stable(P(10, 3, 0, 1), 0) is True


def test_type2_x_stable_matches_direct_computation():
    """The rational inequality decides [x at floor(h_d)] == [x at h_d] exactly."""
    for p in enumerate_feasible(100, "krein", True):
        if classify_type(p) == "type_I_only":
            continue
        sigma = int(restricted_eigenvalues(p).sigma.as_fraction())
        for d in range(0, p.k):
            h_d = Fraction(p.v * (d - sigma), p.k - sigma)
            floor_hd = h_d.numerator // h_d.denominator
            if not 1 <= floor_hd < p.v:
                continue
            direct = nearest_int(critical_x(p, floor_hd, d)) == d - sigma - 1
            assert type2_x_stable(p, d) == direct, (p, d)


def test_type2_strict_examples():
    v = type2_strict(P(256, 153, 92, 90), 0)
    assert v.predicate_holds is True and v.verified_strict is True
    assert rab_upper(P(256, 153, 92, 90), 0) <= 10
    assert haemers_upper(P(256, 153, 92, 90), 0).floor() == 11

    assert type2_strict(P(16, 5, 0, 2), 0).predicate_holds is False   # h_0 = 6
    assert type2_strict(P(10, 6, 3, 4), 0).predicate_holds is False   # frac = bound


def test_cab_strict_examples():
    v = cab_strict(P(256, 102, 38, 42))
    assert v.predicate_holds is True and v.verified_strict is True
    assert cab_strict(P(10, 3, 0, 1)).predicate_holds is False
    assert cab_strict(P(16, 6, 2, 2)).predicate_holds is False
    with pytest.raises(ValueError):
        cab_strict(P(13, 6, 2, 3))           # irrational eigenvalues
    with pytest.raises(ValueError):
        cab_strict(P(10, 4, 3, 0))           # imprimitive


def test_cab_strict_biconditional():
    """On integer-eigenvalue tuples with v-2k+lam > 0, predicate == reality."""
    for p in enumerate_feasible(100, "krein", True):
        if classify_type(p) == "type_I_only" or p.v - 2 * p.k + p.lam <= 0:
            continue
        v = cab_strict(p)
        strict = cab(p.v, p.k, p.lam) < delsarte_clique_bound(p)
        assert v.predicate_holds == strict == v.verified_strict, p


def test_paley_params():
    assert paley_params(5) == P(5, 2, 0, 1)
    assert paley_params(13) == P(13, 6, 2, 3)
    assert paley_params(17) == P(17, 8, 3, 4)
    with pytest.raises(ValueError):
        paley_params(7)


def test_cy1_params():
    assert cy1_params(2) == P(16, 5, 0, 2)
    assert cy1_params(3) == P(81, 40, 19, 20)
    assert cy1_params(4) == P(256, 153, 92, 90)
    with pytest.raises(ValueError):
        cy1_params(1)
    for q in (2, 3, 4, 5, 7):
        p = cy1_params(q)
        assert p.basic_identity_holds
        ev = restricted_eigenvalues(p)
        assert ev.rho == (q - 1) ** 2 and ev.sigma == 1 - 2 * q


def test_primality_helpers():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(2, 30) if is_prime_power(n)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_witness_search_paley():
    results = dict(witness_search("paley", 0, 100))
    holding = sorted(q for q, v in results.items() if v.predicate_holds)
    assert holding == [17, 37]
    for q in holding:
        assert results[q].verified_strict
    assert results[13].predicate_holds is False
    assert results[5].predicate_holds is False    # exact boundary hit

    results16 = dict(witness_search("paley", 0, 16))
    assert set(results16) == {5, 13}
    assert not any(v.predicate_holds for v in results16.values())


def test_witness_search_cy1():
    results = dict(witness_search("cy1", 0, 5))
    assert set(results) == {2, 3, 4, 5}
    assert results[4].predicate_holds is True and results[4].verified_strict
    assert results[2].predicate_holds is False
    assert results[3].predicate_holds is False
    with pytest.raises(ValueError):
        witness_search("unknown", 0, 10)


def test_soundness_over_enumeration():
    """Any predicate that claims a strict win must match direct computation."""
    for p in enumerate_feasible(100, "krein", True):
        kind = classify_type(p)
        sigma = restricted_eigenvalues(p).sigma
        for d in range(0, p.k + 1):
            verdicts = []
            if kind == "type_I_only" and d < -sigma:
                verdicts.append(type1_window_1(p, d))
                if sigma < -2:
                    verdicts.append(type1_window_2(p, d))
                if sigma < -3:
                    verdicts.append(type1_window_3(p, d))
            if kind in ("type_II_only", "both"):
                verdicts.append(type2_strict(p, d))
            for v in verdicts:
                assert v.predicate_holds is not None
                if v.predicate_holds:
                    assert v.verified_strict, (p, d, v.window)


def test_type1_fractional_part_case_split():
    """frac(h_d) = 2t + d/sigma + (a-1) for the a picked by the t-ranges."""
    for p in enumerate_feasible(200, "krein", True):
        if classify_type(p) != "type_I_only":
            continue
        ev = restricted_eigenvalues(p)
        sigma = ev.sigma
        t = (-sigma).frac()
        for d in range(0, (-sigma).floor() + 1):
            if not d < -sigma:
                continue
            h_d = haemers_upper(p, d)
            f = h_d.frac()
            d_over_sigma = d / sigma
            boundary = -d_over_sigma / 2          # -d/(2 sigma) >= 0
            if t < boundary:
                a = 2
            elif t < boundary + Fraction(1, 2):
                a = 1
            else:
                a = 0
            assert f == 2 * t + d_over_sigma + (a - 1), (p, d)
            # floor(h_d) = 2(d - sigma - t) - a, and d - sigma - t is an integer
            x = d + (-sigma).floor()
            assert h_d.floor() == 2 * x - a, (p, d)


def test_type2_negativity_window_scan():
    """R(d-sigma-1, y, d) < 0 exactly between the roots (k-sigma)(d-sigma-1)/mu and h_d.

    The two roots appear in that order whenever (d-sigma)(rho-sigma) <= k-sigma
    (the regime the strictness criterion lives in) and swap otherwise, so the
    scan compares against the unordered root pair.
    """
    for p in enumerate_feasible(60, "krein", True):
        if classify_type(p) == "type_I_only":
            continue
        rho = int(restricted_eigenvalues(p).rho.as_fraction())
        sigma = int(restricted_eigenvalues(p).sigma.as_fraction())
        for d in range(0, p.k + 1):
            x = d - sigma - 1
            r1 = Fraction((p.k - sigma) * (d - sigma - 1), p.mu)
            r2 = Fraction(p.v * (d - sigma), p.k - sigma)
            lo, hi = min(r1, r2), max(r1, r2)
            if (d - sigma) * (rho - sigma) <= p.k - sigma:
                assert (lo, hi) == (r1, r2), (p, d)
            for y in range(1, p.v + 1):
                negative = rap_eval(p, x, y, d) < 0
                assert negative == (lo < y < hi), (p, d, y)
