import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from numlore import puzzles
from numlore.errors import DomainError
from numlore.puzzles import EstateProblem, MealProblem, WageProblem

F = Fraction


def test_camels():
    sol = puzzles.solve_estate(EstateProblem(17, (F(1, 2), F(1, 3), F(1, 9))))
    assert (sol.borrow, sol.shares) == (1, (9, 6, 2))
    assert (18 // 2, 18 // 3, 18 // 9) == (9, 6, 2) and 9 + 6 + 2 == 17


def test_camels_with_eighteen_is_unsolvable():
    with pytest.raises(puzzles.UnsolvableError):
        puzzles.solve_estate(EstateProblem(18, (F(1, 2), F(1, 3), F(1, 9))))


def test_smallest_estate():
    sol = puzzles.solve_estate(EstateProblem(1, (F(1, 2),)))
    assert (sol.borrow, sol.shares) == (1, (1,))


def test_estate_borrow_bound():
    p = EstateProblem(1, (F(1, 10**7),))
    with pytest.raises(puzzles.UnsolvableError):
        puzzles.solve_estate(p)
    assert puzzles.solve_estate(p, max_borrow=10**7).borrow == 10**7 - 1


@pytest.mark.parametrize("fractions", [(), (F(0),), (F(1),), (F(2, 3), F(1, 2))])
def test_estate_invalid(fractions):
    with pytest.raises(DomainError):
        EstateProblem(10, fractions)


def _scan_estate(total, fractions, max_k=1000):
    for k in range(max_k + 1):
        shares = [(total + k) * f for f in fractions]
        if all(s.denominator == 1 and s > 0 for s in shares) and sum(shares) == total:
            return k, tuple(int(s) for s in shares)
    return None


def test_estate_matches_k_scan():
    rng = random.Random(2)
    pool = [F(1, d) for d in range(2, 13)]
    solvable = 0
    for _ in range(500):
        fractions = tuple(rng.sample(pool, rng.randint(1, 4)))
        if sum(fractions) > 1:
            continue
        total = rng.randint(1, 60)
        want = _scan_estate(total, fractions)
        try:
            sol = puzzles.solve_estate(EstateProblem(total, fractions))
            got = (sol.borrow, sol.shares)
        except puzzles.UnsolvableError:
            got = None
        if got is not None and got[0] > 1000:
            continue
        assert got == want
        if got:
            solvable += 1
            assert sum(got[1]) == total and all(s > 0 for s in got[1])
    assert solvable > 10


def test_bread():
    pay = puzzles.solve_meal(MealProblem((3, 5), 3, F(8)))
    assert pay == [1, 7]
    assert pay != [3, 5]  # the naive split by loaves brought


def test_bread_surpluses():
    ration = F(8, 3)
    assert (3 - ration, 5 - ration) == (F(1, 3), F(7, 3))


def test_bread_symmetric():
    assert puzzles.solve_meal(MealProblem((4, 4), 3, F(8))) == [4, 4]


def test_bread_overeater_is_ill_posed():
    with pytest.raises(puzzles.IllPosedError):
        puzzles.solve_meal(MealProblem((2, 6), 3, F(12)))


def test_bread_no_guest():
    with pytest.raises(puzzles.IllPosedError):
        puzzles.solve_meal(MealProblem((4, 4), 2, F(8)))
    assert puzzles.solve_meal(MealProblem((4, 4), 2, F(0))) == [0, 0]


@pytest.mark.parametrize("contribs, eaters", [((), 2), ((0, 0), 3), ((-1, 3), 3), ((1, 2, 3), 2)])
def test_meal_invalid(contribs, eaters):
    with pytest.raises(DomainError):
        MealProblem(contribs, eaters, F(1))


@given(
    st.lists(st.integers(1, 30), min_size=1, max_size=4),
    st.integers(1, 4),
    st.fractions(min_value=0, max_value=100, max_denominator=20),
    st.fractions(min_value=F(1, 10), max_value=10, max_denominator=10),
)
def test_meal_properties(contribs, guests, payment, scale):
    eaters = len(contribs) + guests
    ration = F(sum(contribs), eaters)
    if any(c < ration for c in contribs):
        with pytest.raises(puzzles.IllPosedError):
            puzzles.solve_meal(MealProblem(tuple(contribs), eaters, payment))
        return
    pay = puzzles.solve_meal(MealProblem(tuple(contribs), eaters, payment))
    assert sum(pay) == payment and all(p >= 0 for p in pay)
    # homogeneity: the solver is linear in the payment and invariant in loaf units
    scaled = [c * scale for c in contribs]
    total = sum(scaled)
    surplus = [c - total / eaters for c in scaled]
    assert [payment * scale * s / sum(surplus) for s in surplus] == [p * scale for p in pay]
    doubled = puzzles.solve_meal(MealProblem(tuple(2 * c for c in contribs), eaters, payment * 2))
    assert doubled == [2 * p for p in pay]


@pytest.mark.parametrize("P, C, W, want", [(30, 10, 3, F(10, 9)), (30, 10, 15, F(10)), (30, 0, 7, F(0)), (12, 5, 1, F(5, 11))])
def test_wage(P, C, W, want):
    assert puzzles.solve_wage(WageProblem(P, F(C), W)) == want


def test_wage_zero_days(caplog):
    assert puzzles.solve_wage(WageProblem(30, F(10), 0)) == 0
    assert "zero days" in caplog.text


@pytest.mark.parametrize("P, C, W", [(30, F(10), 30), (30, F(10), -1), (0, F(1), 0), (5, F(-1), 1)])
def test_wage_invalid(P, C, W):
    with pytest.raises(DomainError):
        WageProblem(P, C, W)


def test_wage_back_substitution():
    rng = random.Random(4)
    for _ in range(1000):
        P = rng.randint(2, 400)
        W = rng.randint(1, P - 1)
        C = F(rng.randint(0, 10**4), rng.randint(1, 100))
        d = puzzles.solve_wage(WageProblem(P, C, W))
        assert F(W) * (C + d) / P == d
