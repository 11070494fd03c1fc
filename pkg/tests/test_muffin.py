from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from muffin_dap import (MuffinSpec, Route, alt_supply_solution, muffin_to_dap3, muffin_value, n2_closed_form,
                        one_third_solution, solve_recursive, validate_assignment, validate_solution)

THIRD = F(1, 3)


def test_special_routes():
    assert muffin_value(9, 1).f == 1
    assert muffin_value(12, 4).f == 1 and muffin_value(12, 4).route is Route.TRIVIAL
    assert muffin_value(7, 2).f == F(1, 2)
    assert muffin_value(3, 5).route is Route.RECIPROCAL


def test_examples():
    assert muffin_value(7, 6).f == THIRD
    assert muffin_value(3, 5).f == F(3, 5) * muffin_value(5, 3).f == F(1, 4)
    ans = muffin_value(7, 5)
    assert (ans.g, ans.f, ans.route) == (F(3, 10), THIRD, Route.ONE_THIRD)


def test_solution_attached():
    ans = muffin_value(5, 3, with_solution=True)
    assert ans.f == F(5, 12)
    assert validate_solution(muffin_to_dap3(MuffinSpec(5, 3)), ans.solution) is None
    assert muffin_value(5, 3).solution is None


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        muffin_value(0, 3)


@given(st.integers(1, 12), st.integers(1, 12), st.sampled_from([2, 3, 5]))
def test_scaling(m, s, k):
    assert muffin_value(k * m, k * s).f == muffin_value(m, s).f


@given(st.integers(1, 30), st.integers(1, 30))
def test_reciprocity(m, s):
    if m < s:
        assert muffin_value(m, s).f == F(m, s) * solve_f_directly(s, m)


def solve_f_directly(m, s):
    if s == 1 or m % s == 0:
        return F(1)
    if (2 * m) % s == 0:
        return F(1, 2)
    return max(THIRD, solve_recursive(muffin_to_dap3(MuffinSpec(m, s))).value)


@pytest.mark.parametrize("m,s", [(5, 3), (7, 5), (4, 3), (11, 7), (13, 4), (9, 7)])
def test_one_third_solution(m, s):
    a = one_third_solution(m, s)
    assert validate_assignment(m, s, a.muffins, a.students) is None
    assert a.value >= THIRD


def test_one_third_exact_thirds():
    a = one_third_solution(5, 3)
    assert all(sorted(r) == [THIRD, THIRD, F(1, 2), F(1, 2)] for r in a.students)
    assert one_third_solution(7, 5).value == THIRD
    assert one_third_solution(4, 3).value == THIRD == muffin_value(4, 3).f
    with pytest.raises(ValueError):
        one_third_solution(3, 3)


def test_alt_supply_boundaries():
    a = alt_supply_solution(15, 8)
    assert sorted(a.students) == sorted([(F(3, 8),) * 5] * 3 + [(F(5, 8),) * 3] * 5)
    assert validate_assignment(15, 8, a.muffins, a.students) is None
    a = alt_supply_solution(8, 6)
    d = 2
    assert sorted(a.students) == sorted([(THIRD,) * 4] * d + [(F(2, 3),) * 2] * (2 * d))
    with pytest.raises(ValueError):
        alt_supply_solution(7, 6)


def _band(limit):
    for s in range(3, limit + 1):
        for m in range(s + 1, 3 * s):
            n = (2 * m) // s
            x = F(m, s)
            if n >= 2 and F(n * (n + 2), 2 * (n + 1)) <= x < F(n + 1, 2):
                yield m, s


@pytest.mark.parametrize("m,s", list(_band(30)))
def test_alt_supply_is_optimal(m, s):
    a = alt_supply_solution(m, s)
    assert validate_assignment(m, s, a.muffins, a.students) is None
    n = (2 * m) // s
    assert a.value == 1 - F(m, s) / n
    assert max(len(r) for r in a.students) == n + 2
    f = muffin_value(m, s).f
    assert f == max(THIRD, a.value)
    if n >= 3:
        assert a.value == f


def test_closed_form_examples():
    assert n2_closed_form(5, 4) == F(3, 8)
    assert n2_closed_form(7, 5) == F(3, 10)
    assert n2_closed_form(6, 5) == F(2, 5) == muffin_value(6, 5).f
    with pytest.raises(ValueError):
        n2_closed_form(5, 3)
    with pytest.raises(ValueError):
        n2_closed_form(4, 2)


@pytest.mark.parametrize("s", range(3, 41))
def test_closed_form_matches_solver(s):
    for m in range(s + 1, (3 * s + 1) // 2):
        if (2 * m) % s:
            assert n2_closed_form(m, s) == solve_recursive(muffin_to_dap3(MuffinSpec(m, s))).value


@pytest.mark.parametrize("s", range(3, 31))
def test_above_one_third_when_n_at_least_three(s):
    for m in range((3 * s) // 2 + 1, 3 * s):
        if (2 * m) % s and m % s:
            assert muffin_value(m, s).f > THIRD
