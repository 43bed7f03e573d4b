import math
import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcurv13 import bazaikin as bz

entries5 = st.tuples(*[st.integers(min_value=-9, max_value=9)] * 5)


# --- oracles -----------------------------------------------------------


def freeness_oracle_120(q):
    """Full permutation-group quantification of the gcd condition."""
    if any(x % 2 == 0 for x in q):
        return False
    for s in permutations(range(5)):
        if math.gcd(q[s[0]] + q[s[1]], q[s[2]] + q[s[3]]) != 2:
            return False
    return True


def e3_oracle_poly(q):
    """Coefficient of x^2 in prod (x + q_i), by polynomial expansion."""
    coeffs = [1]  # ascending powers
    for a in q:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] += c * a
        coeffs = nxt
    return coeffs[2]


# --- canonicalization --------------------------------------------------


def test_canonicalize_examples():
    assert tuple(bz.QTuple.of(3, 1, 1, 1, 1)) == (3, 1, 1, 1, 1)
    assert tuple(bz.QTuple.of(1, 1, 3, 1, 1)) == (3, 1, 1, 1, 1)
    assert tuple(bz.QTuple.of(-1, -1, -1, -1, -3)) == (3, 1, 1, 1, 1)


@given(entries5)
def test_canonicalize_idempotent(q):
    c1 = bz.QTuple.of(*q)
    c2 = bz.QTuple.of(*tuple(c1))
    assert c1 == c2


@given(entries5, st.permutations(range(5)))
def test_canonicalize_permutation_invariant(q, perm):
    assert bz.QTuple.of(*q) == bz.QTuple.of(*[q[i] for i in perm])


@given(entries5)
def test_canonical_form_is_sorted_and_majority_positive(q):
    c = tuple(bz.QTuple.of(*q))
    assert list(c) == sorted(c, reverse=True)
    pos = sum(1 for x in c if x > 0)
    neg = sum(1 for x in c if x < 0)
    assert pos >= neg


def test_rejects_wrong_arity():
    with pytest.raises(ValueError):
        bz.QTuple.of(1, 2, 3)


# --- freeness ----------------------------------------------------------


def test_free_all_ones():
    rep = bz.check_free((1, 1, 1, 1, 1))
    assert rep.verdict and rep.all_odd and not rep.failing_pairs
    # all 15 disjoint-pair gcds are exactly 2, computed here directly
    q = (1, 1, 1, 1, 1)
    pairs = [
        (a, b)
        for a in combinations(range(5), 2)
        for b in combinations(range(5), 2)
        if set(a).isdisjoint(b) and a < b
    ]
    assert len(pairs) == 15
    assert all(
        math.gcd(q[i] + q[j], q[k] + q[l]) == 2 for (i, j), (k, l) in pairs
    )


def test_not_free_even_entry():
    rep = bz.check_free((1, 1, 1, 1, 2))
    assert not rep.verdict and not rep.all_odd


def test_not_free_gcd_four():
    rep = bz.check_free((5, 3, 3, 1, 1))
    assert not rep.verdict and rep.all_odd
    assert any(g == 4 for _, _, g in rep.failing_pairs)


def test_reduction_matches_full_permutation_oracle():
    rng = random.Random(20240817)
    for _ in range(200):
        q = tuple(rng.randint(-15, 15) for _ in range(5))
        assert bz.check_free(q).verdict == freeness_oracle_120(q), q


# --- curvature ---------------------------------------------------------


def test_curvature_examples():
    assert bz.check_curvature((1, 1, 1, 1, 1)) is bz.Curvature.POSITIVE_ALL
    assert bz.check_curvature((-1, -1, -1, -1, -1)) is bz.Curvature.NEGATIVE_ALL
    assert bz.check_curvature((3, 1, 1, 1, -3)) is bz.Curvature.MIXED


@given(entries5)
def test_curvature_flips_with_sign(q):
    flipped = tuple(-x for x in q)
    c1, c2 = bz.check_curvature(q), bz.check_curvature(flipped)
    swap = {
        bz.Curvature.POSITIVE_ALL: bz.Curvature.NEGATIVE_ALL,
        bz.Curvature.NEGATIVE_ALL: bz.Curvature.POSITIVE_ALL,
        bz.Curvature.MIXED: bz.Curvature.MIXED,
    }
    assert c2 is swap[c1]


# --- torsion order -----------------------------------------------------


def test_h6_examples():
    assert bz.h6_order((1, 1, 1, 1, 1)) == bz.TorsionOrder(Fraction(10, 8), False)
    assert bz.h6_order((1, 1, 1, 1, -1)) == bz.TorsionOrder(Fraction(-2, 8), False)
    assert bz.h6_order((2, 0, 0, 0, 0)) == bz.TorsionOrder(Fraction(0), True)


@given(entries5)
def test_e3_against_polynomial_expansion(q):
    assert bz.e3(q) == e3_oracle_poly(q)


@given(entries5, st.permutations(range(5)))
def test_symmetric_invariance(q, perm):
    qp = tuple(q[i] for i in perm)
    assert bz.e3(q) == bz.e3(qp)
    assert bz.check_free(q).verdict == bz.check_free(qp).verdict


@given(entries5)
def test_sign_flip_invariance(q):
    flipped = tuple(-x for x in q)
    assert bz.check_free(q).verdict == bz.check_free(flipped).verdict
    assert abs(bz.h6_order(q).value) == abs(bz.h6_order(flipped).value)


# --- cohomology profile ------------------------------------------------


def test_profile_rejects_non_free():
    with pytest.raises(ValueError):
        bz.integral_cohomology((1, 1, 1, 1, 2))


def test_profile_shape_trivial_torsion():
    prof = bz.CohomologyProfile(torsion_order=Fraction(1))
    assert prof.torsion_degrees == ()
    assert [k for k in range(14) if prof.free_rank(k)] == [0, 2, 4, 9, 11, 13]
    assert prof.rational_betti() == (1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1)


def test_profile_shape_with_torsion():
    prof = bz.CohomologyProfile(torsion_order=Fraction(3))
    assert prof.torsion_degrees == (6, 8)
    assert prof.describe(6) == "Z/3" and prof.describe(8) == "Z/3"
    assert prof.describe(0) == "Z" and prof.describe(13) == "Z"


def test_profile_of_all_ones_reports_exact_rational():
    prof = bz.integral_cohomology((1, 1, 1, 1, 1))
    assert prof.torsion_order == Fraction(5, 4)
    assert not prof.m_integral
    assert prof.torsion_degrees == (6, 8)


# --- universal coefficients --------------------------------------------


def uct_oracle(free_ranks, torsion, p):
    """Independent accounting of mod-p dims from integral data."""
    top = len(free_ranks) - 1
    out = []
    for k in range(top + 1):
        d = free_ranks[k]
        if torsion[k] % p == 0 and torsion[k] != 1:
            d += 1
        if k + 1 <= top and torsion[k + 1] % p == 0 and torsion[k + 1] != 1:
            d += 1
        out.append(d)
    return tuple(out)


def test_mod3_with_torsion_divisible_by_three():
    prof = bz.CohomologyProfile(torsion_order=Fraction(3))
    dims = bz.mod_p_betti(prof, 3)
    assert sum(dims) == 10
    assert tuple(i for i, d in enumerate(dims) if d) == (0, 2, 4, 5, 6, 7, 8, 9, 11, 13)
    free = [prof.free_rank(k) for k in range(14)]
    tor = [3 if k in (6, 8) else 1 for k in range(14)]
    assert dims == uct_oracle(free, tor, 3)


def test_mod3_without_three_torsion():
    prof = bz.CohomologyProfile(torsion_order=Fraction(5))
    dims = bz.mod_p_betti(prof, 3)
    assert sum(dims) == 6
    assert tuple(i for i, d in enumerate(dims) if d) == (0, 2, 4, 9, 11, 13)


def test_mod5_without_five_torsion_matches_rational():
    prof = bz.CohomologyProfile(torsion_order=Fraction(3))
    assert bz.mod_p_betti(prof, 5) == prof.rational_betti()


@pytest.mark.parametrize("order", [1, 3, 5, 9, 15])
def test_mod_p_total_at_least_rational(order):
    prof = bz.CohomologyProfile(torsion_order=Fraction(order))
    for p in (3, 5, 7):
        total = sum(bz.mod_p_betti(prof, p))
        assert total >= 6
        assert (total == 6) == (order % p != 0)


def test_mod3_type_uses_e3():
    assert bz.mod3_type((1, 1, 1, 1, 1)) == bz.MOD3_CP2xS9  # e3 = 10
    assert bz.e3((3, 1, 1, 1, 1)) == 22  # 6 triples with the 3, 4 without
    assert bz.mod3_type((3, 1, 1, 1, 1)) == bz.MOD3_CP2xS9
    q = (3, 3, 3, 1, 1)
    assert bz.e3(q) == e3_oracle_poly(q) == 90
    assert bz.mod3_type(q) == bz.MOD3_CP4xS5


# --- catalog -----------------------------------------------------------


def test_enumerate_bound_one_and_two():
    assert [tuple(q) for q in bz.enumerate_spaces(1)] == [(1, 1, 1, 1, 1)]
    assert [tuple(q) for q in bz.enumerate_spaces(2)] == [(1, 1, 1, 1, 1)]


def test_enumerate_output_is_canonical_sorted_unique():
    out = bz.enumerate_spaces(5)
    assert out == sorted(set(out))
    for q in out:
        assert bz.QTuple.of(*tuple(q)) == q
        assert bz.check_curvature(q) is bz.Curvature.POSITIVE_ALL
        # re-verify the 15 gcds independently
        e = tuple(q)
        for a in combinations(range(5), 2):
            for b in combinations(range(5), 2):
                if set(a).isdisjoint(b):
                    assert math.gcd(e[a[0]] + e[a[1]], e[b[0]] + e[b[1]]) == 2


def test_enumerate_rejects_bad_bound():
    with pytest.raises(ValueError):
        bz.enumerate_spaces(0)
