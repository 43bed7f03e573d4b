import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pcurv13 import cohomology as ch


# --- oracles -----------------------------------------------------------


def exactness_oracle(bX, bF, dim_x, R):
    """Independent rank propagation along the full flattened sequence.

    Builds the dimension list A_0 B_0 C_0 A_1 ... A_n B_n C_n and pushes
    the forced ranks through; exact iff every rank is nonnegative and the
    final one closes at zero.
    """

    def bx(i):
        return bX[i] if 0 <= i < len(bX) else 0

    def bf(i):
        return bF[i] if 0 <= i < len(bF) else 0

    def r(i):
        return R[i] if 0 <= i < len(R) else 0

    dims = []
    for i in range(dim_x + 1):
        a = r(i) if i < dim_x else 0
        dims += [a, bx(i), r(i - 1) + bf(i)]
    rank = 0
    for d in dims:
        rank = d - rank
        if rank < 0:
            return False
    return rank == 0


def trace_sweep_oracle(limit=99):
    """Integer values of 2*cos(2*pi*a/n) over odd n, plus the trivial pair."""
    vals = {2}
    for n in range(1, limit + 1, 2):
        for a in range(n):
            x = 2 * math.cos(2 * math.pi * a / n)
            if abs(x - round(x)) < 1e-9:
                vals.add(round(x))
    return vals


# --- euler and exact sequences -------------------------------------------


def test_euler_examples():
    assert ch.euler_char((1, 0, 0, 0, 0, 1)) == 0
    assert ch.euler_char((1, 0, 1, 1, 0, 1)) == 0
    assert ch.euler_char((1, 0, 2, 0, 1)) == 4


def test_smith_gysin_five_sphere():
    sols = ch.smith_gysin_solve((1, 0, 0, 0, 0, 1), None, 5)
    assert [s.R for s in sols] == [(1, 0, 1, 0, 1)]
    assert sols[0].chi_bar == 3


def test_smith_gysin_product_component():
    sols = ch.smith_gysin_solve((1, 0, 1, 1, 0, 1), None, 5)
    assert [s.R for s in sols] == [(1, 0, 2, 0, 1)]
    assert sols[0].chi_bar == 4


def test_smith_gysin_nonzero_euler_is_empty():
    assert ch.smith_gysin_solve((1, 0, 1), None, 2) == []


def test_smith_gysin_three_sphere():
    sols = ch.smith_gysin_solve((1, 0, 0, 1), None, 3)
    assert [s.R for s in sols] == [(1, 0, 1)]
    assert sols[0].chi_bar == 2


def test_solutions_pass_independent_oracle():
    cases = [
        ((1, 0, 0, 0, 0, 1), (), 5),
        ((1, 0, 1, 1, 0, 1), (), 5),
        ((1, 0, 0, 1), (), 3),
        ((1, 1), (), 1),
        ((1, 0, 0, 0, 0, 1), (1, 1), 5),
        ((2, 0, 0, 0, 0, 2), (), 5),
    ]
    for bX, bF, dim in cases:
        sols = ch.smith_gysin_solve(bX, bF or None, dim)
        for s in sols:
            assert exactness_oracle(bX, bF, dim, s.R), (bX, bF, s.R)
        # the solver finds everything the oracle accepts (within the cap)
        budget = sum(bX) + sum(bF)
        found = {s.R for s in sols}
        import itertools

        for R in itertools.product(range(budget + 1), repeat=dim):
            assert (R in found) == exactness_oracle(bX, bF, dim, R)


@given(
    st.lists(st.integers(min_value=0, max_value=2), min_size=4, max_size=6).map(tuple)
)
def test_fiberless_solutions_force_zero_euler(bX):
    bX = (1,) + bX[1:]
    dim = len(bX) - 1
    sols = ch.smith_gysin_solve(bX, None, dim)
    if ch.euler_char(bX) != 0:
        assert sols == []
    for s in sols:
        assert exactness_oracle(bX, (), dim, s.R)


# --- trace sets ----------------------------------------------------------


def test_trace_sets_exact():
    assert ch.integer_trace_set(2, True) == {-1, 2}
    assert ch.integer_trace_set(1, True) == {1}
    assert ch.integer_trace_set(2, False) == {-2, -1, 0, 1, 2}
    assert ch.integer_trace_set(1, False) == {-1, 1}
    assert ch.integer_trace_set(0, True) == {0}
    with pytest.raises(ValueError):
        ch.integer_trace_set(3, True)


def test_trace_set_matches_cosine_sweep():
    assert ch.integer_trace_set(2, True) == frozenset(trace_sweep_oracle(99))


def test_trace_set_any_order_matches_pair_sweep():
    # all integer sums of two roots of unity with order <= 24
    vals = set()
    for n1 in range(1, 25):
        for a1 in range(n1):
            for n2 in range(1, 25):
                for a2 in range(n2):
                    z = (
                        complex(math.cos(2 * math.pi * a1 / n1), math.sin(2 * math.pi * a1 / n1))
                        + complex(math.cos(2 * math.pi * a2 / n2), math.sin(2 * math.pi * a2 / n2))
                    )
                    if abs(z.imag) < 1e-9 and abs(z.real - round(z.real)) < 1e-9:
                        vals.add(round(z.real))
    assert ch.integer_trace_set(2, False) == frozenset(vals)


def test_lefschetz_value_sets():
    assert ch.lefschetz_value_set(ch.LefschetzSpec((1, 0, 2, 0, 1))) == {1, 4}
    assert ch.lefschetz_value_set(ch.LefschetzSpec((1, 0, 1, 0, 1))) == {3}
    assert ch.lefschetz_value_set(ch.LefschetzSpec(())) == {0}
    assert ch.lefschetz_value_set(ch.LefschetzSpec((0, 0, 0))) == {0}
    with pytest.raises(ValueError):
        ch.lefschetz_value_set(ch.LefschetzSpec((1, 0, 3)))


def test_lefschetz_signs_alternate():
    # odd-degree contributions enter negatively
    assert ch.lefschetz_value_set(ch.LefschetzSpec((1, 1), odd_order=True)) == {0}
    assert ch.lefschetz_value_set(ch.LefschetzSpec((0, 2), odd_order=True)) == {-2, 1}


# --- divisibility obstruction ---------------------------------------------


def test_divisibility_examples():
    d3 = ch.QuotientIndex("cd", 3)
    assert ch.divisibility_obstruction(d3, {1, 4}).excluded
    ok = ch.divisibility_obstruction(d3, {3})
    assert not ok.excluded and ok.surviving == {3}
    p5 = ch.QuotientIndex("zpxzp", 5)
    assert ch.divisibility_obstruction(p5, {3}).excluded


def test_divisibility_zero_is_never_an_obstruction():
    res = ch.divisibility_obstruction(ch.QuotientIndex("cd", 9), {0})
    assert not res.excluded and res.surviving == {0}


def test_quotient_index_parsing():
    qi = ch.QuotientIndex.parse("cd:3")
    assert qi.kind == "cd" and qi.divisor == 3
    with pytest.raises(ValueError):
        ch.QuotientIndex.parse("weird:3")


# --- Borel feasibility -----------------------------------------------------


def test_borel():
    assert not any(ch.borel_feasible(10, (4,) * k) for k in range(4))
    assert ch.borel_feasible(10, (2, 4, 4))
    assert ch.borel_feasible(0, ())
    with pytest.raises(ValueError):
        ch.borel_feasible(10, (3, 4))
    with pytest.raises(ValueError):
        ch.borel_feasible(7, (4,))


# --- profile census ---------------------------------------------------------


def test_profile_census_budget6():
    profs = ch.enumerate_profiles(6, 5)
    assert [p.components for p in profs] == [
        ("S5",),
        ("S5", "S5"),
        ("S5", "S5", "S5"),
        ("CP1xS3",),
        ("S5", "CP1xS3"),
    ]


def test_profile_census_smaller_budgets():
    assert [p.components for p in ch.enumerate_profiles(2, 5)] == [("S5",)]
    assert [p.components for p in ch.enumerate_profiles(4, 5)] == [
        ("S5",),
        ("S5", "S5"),
        ("CP1xS3",),
    ]


def test_profile_census_never_two_even_generator_components():
    for budget in (6, 8, 10, 12):
        for p in ch.enumerate_profiles(budget, 5):
            assert p.count("CP1xS3") <= 1
            assert p.total_betti <= budget
            for c in p.components:
                b = ch.COMPONENT_BETTI[c]
                assert b[0] == 1 and b[1] == 0
                assert all(b[i] == b[len(b) - 1 - i] for i in range(len(b)))


def test_profile_census_validation():
    with pytest.raises(ValueError):
        ch.enumerate_profiles(1, 5)
    with pytest.raises(ValueError):
        ch.enumerate_profiles(6, 4)
    with pytest.raises(ValueError):
        ch.FixedPointProfile(("S5", "X9"))


# --- geometric side conditions ----------------------------------------------


def test_frankel():
    assert not ch.frankel_compatible((7, 7), 13)
    assert ch.frankel_compatible((7, 5), 13)
    assert ch.frankel_compatible((5, 5, 5), 13)
    assert ch.frankel_compatible((13,), 13)


def test_allday():
    assert ch.allday_bound_check((1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1), (1, 0, 0, 0, 0, 1))
    assert not ch.allday_bound_check((1, 0, 1), (1, 1, 1, 1))
    assert ch.allday_bound_check((1, 0, 1), ())


def test_mod_p_component_census():
    assert ch.mod_p_component_census(5) == [
        ("S5", (1, 0, 0, 0, 0, 1)),
        ("S2xS3", (1, 0, 1, 1, 0, 1)),
    ]
    assert ch.mod_p_component_census(3) == [("S5", (1, 0, 0, 0, 0, 1))]
    # the circle-times-4-sphere shape (b1=1, b2=0) never appears
    for budget in range(2, 12):
        for _, prof in ch.mod_p_component_census(budget):
            assert not (prof[1] > 0 and prof[2] == 0)


def test_davis_parity():
    assert ch.davis_parity((1, 0, 0, 0, 0, 1)) == 1
    assert ch.davis_parity((1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1)) == 3
    with pytest.raises(ValueError):
        ch.davis_parity((1, 0, 1))
