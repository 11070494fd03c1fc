from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from muffin_dap import (Dap3, MuffinSpec, classify, count_ops, depth, family_members, muffin_to_dap3,
                        n2_alt_reduce, n2_expand, reduce_problem, solve_huddleston, solve_recursive,
                        solve_zero_type1, solve_zero_type2, validate_dap3, validate_solution)
from muffin_dap.recursive import _expand
from fixtures import FAMILY_N3, FAMILY_WIDE_V, WORKED, WORKED_SOLUTION, WORKED_U

GRANDCHILD = Dap3(6, 2, 2, 1, 1, 2, F(11, 5), F(3, 5), F(4, 5))

ZERO1_CASES = {
    "exact_fill": Dap3(3, 2, 2, 2, 1, 2, F(3), F(1), F(5, 2)),
    "strict_delegate": Dap3(3, 2, 2, 4, 1, 5, F(3), F(1), F(11, 5)),
    "constant_pair": Dap3(2, 2, 3, 4, 1, 2, F(2), F(1), F(7, 2)),
    "even_delegate": Dap3(3, 2, 3, 5, 3, 3, F(3), F(1), F(4)),
}


def muffin(m, s):
    return muffin_to_dap3(MuffinSpec(m, s))


def check_element_bounds(p, sol):
    assert all(c < p.x_v / p.v for r in sol.U for c in r)
    assert all(c > p.x_u / p.u for r in sol.V for c in r)


def test_zero1_grandchild_of_worked_example():
    sol = solve_zero_type1(GRANDCHILD)
    assert sol.value == F(3, 10)
    assert sol.U == ((F(3, 10), F(3, 10)),)
    assert validate_solution(GRANDCHILD, sol) is None


@pytest.mark.parametrize("name", ZERO1_CASES)
def test_zero1_branches(name):
    p = ZERO1_CASES[name]
    assert validate_dap3(p) is None and classify(p).kind == "Zero1"
    sol = solve_zero_type1(p)
    assert validate_solution(p, sol) is None
    assert sol.value == p.x_u / p.u
    check_element_bounds(p, sol)


def test_zero1_exact_fill_values():
    p = ZERO1_CASES["exact_fill"]
    a, b = p.x_u / p.u, p.x_v / p.v
    q_t = p.n_u // p.s_t
    sol = solve_zero_type1(p)
    assert all(c == b for r in sol.V for c in r)
    assert all(sorted(r) == sorted((a,) * q_t + (b,) * (p.t - q_t)) for r in sol.T)


def test_zero1_constant_pair_values():
    p = ZERO1_CASES["constant_pair"]
    a = p.x_u / p.u
    rho = p.x_t - (p.t - 1) * a
    sigma = (p.x_t - (p.t - 2) * a) / 2
    sol = solve_zero_type1(p)
    assert {c for r in sol.T for c in r} <= {a, rho, sigma}
    assert {c for r in sol.V for c in r} == {rho, sigma}


def test_zero1_rejects():
    with pytest.raises(ValueError):
        solve_zero_type1(WORKED)


def test_zero2_examples():
    sol = solve_zero_type2(muffin(6, 5))
    assert sol.value == F(2, 5) and validate_solution(muffin(6, 5), sol) is None
    sol = solve_zero_type2(muffin(5, 3))
    assert sol.value == F(5, 12) and validate_solution(muffin(5, 3), sol) is None
    top = family_members(FAMILY_N3)[0]
    sol = solve_zero_type2(top)
    assert {c for m in (sol.T, sol.U) for r in m for c in r} == {top.x_u / top.u} == {top.x_t / top.t}
    with pytest.raises(ValueError):
        solve_zero_type2(muffin(7, 6))


def test_zero2_is_copies_of_one_pair():
    p = muffin(5, 3)
    sol = solve_zero_type2(p)
    c = classify(p)
    assert len(set(sol.T)) <= (p.v - 1) * c.b + 1
    assert len(sol.T) % (c.r_v // 2) == 0


def test_reduce_worked_example():
    child, step = reduce_problem(WORKED)
    assert step.b == 1
    assert (child.t, child.s_t, child.x_t) == (WORKED.u, WORKED.s_u, WORKED.x_u)
    assert child.s_u == 1
    assert validate_dap3(child) is None
    assert child.n_t < WORKED.n_t
    sol = solve_recursive(WORKED)
    assert sorted(sol.U) == sorted(WORKED_U)


def test_reduce_seven_six():
    child, step = reduce_problem(muffin(7, 6))
    assert step.b == 2
    assert (child.t, child.u, child.v, child.s_u, child.s_v) == (3, 2, 2, 1, 2)


@pytest.mark.parametrize("m,s", [(7, 6), (13, 11), (19, 17), (11, 9), (23, 19), (31, 29)])
def test_reduce_order2_child_shape(m, s):
    child, _ = reduce_problem(muffin(m, s))
    assert (child.t, child.u, child.v) == (3, 2, 2)


def test_reduce_rejects_zero_problem():
    with pytest.raises(ValueError):
        reduce_problem(muffin(6, 5))


def test_solve_recursive_worked_example():
    sol = solve_recursive(WORKED)
    assert sol.value == F(3, 10)
    assert sol.canonical() == WORKED_SOLUTION.canonical()
    assert [st.child for st in sol.trace][-1] == GRANDCHILD


@pytest.mark.parametrize("m,s,g", [(7, 6, F(1, 3)), (5, 4, F(3, 8)), (6, 5, F(2, 5)), (5, 3, F(5, 12))])
def test_solve_recursive_muffins(m, s, g):
    p = muffin(m, s)
    sol = solve_recursive(p)
    assert sol.value == g
    assert validate_solution(p, sol) is None


def test_solve_recursive_rejects_invalid():
    with pytest.raises(ValueError):
        solve_recursive(Dap3(2, 3, 2, 7, 2, 4, F(1), F(2), F(7, 6)))


def test_huddleston_examples():
    sol = solve_huddleston(muffin(6, 5))
    assert sol.value == F(2, 5)
    assert sol.trace[0].b == 1 and sol.trace[0].child.s_v == 0
    assert solve_huddleston(WORKED).value == F(3, 10)


FAMILY_MEMBERS = family_members(FAMILY_N3) + family_members(FAMILY_WIDE_V)


@given(st.sampled_from(FAMILY_MEMBERS))
@settings(max_examples=150, deadline=None)
def test_trace_invariants(p):
    sol = solve_recursive(p)
    assert validate_solution(p, sol) is None
    assert len(sol.trace) == depth(p)
    prev = p
    for step in sol.trace:
        assert validate_dap3(step.child) is None
        assert step.child.n_t < prev.n_t
        assert solve_recursive(step.child).value == sol.value
        prev = step.child
    check_element_bounds(p, sol)
    other = solve_huddleston(p)
    assert validate_solution(p, other) is None and other.value == sol.value


@given(st.sampled_from(FAMILY_MEMBERS), st.sampled_from([2, 3, 5]))
@settings(max_examples=60, deadline=None)
def test_scaled_problem_same_value(p, k):
    assert solve_recursive(p.scaled(k)).value == solve_recursive(p).value


@given(st.sampled_from([p for p in FAMILY_MEMBERS if classify(p).kind == "Reducible"]))
@settings(max_examples=60, deadline=None)
def test_reconstruction_cost_linear(p):
    child, step = reduce_problem(p)
    child_sol = solve_recursive(child)
    with count_ops() as box:
        _expand(p, step.b, child_sol)
    assert p.n_t <= box[0] <= 3 * p.n_t


def test_alt_reduce_thirteen_eleven():
    big = solve_recursive(muffin(13, 11))
    small = n2_alt_reduce(big)
    assert validate_solution(muffin(7, 5), small) is None
    assert small.value == (11 * big.value - 2) / 5
    assert 11 * big.value == 5 * solve_recursive(muffin(7, 5)).value + 2


def test_alt_reduce_needs_b_at_least_two():
    with pytest.raises(ValueError):
        n2_alt_reduce(solve_recursive(muffin(7, 5)))


def test_expand_seven_five():
    small = solve_recursive(muffin(7, 5))
    big = n2_expand(small, 2)
    assert validate_solution(muffin(13, 11), big) is None
    assert big.value == (5 * small.value + 2) / 11
    assert big.value == solve_recursive(muffin(13, 11)).value
    assert n2_alt_reduce(big).value == small.value
    assert n2_expand(small, 0) == small


def test_expand_ladder():
    d, a = 2, 1
    m, s = 3 * d + a, 3 * d + a - d
    sol = solve_recursive(muffin(m, s))
    for _ in range(5):
        nxt = n2_expand(sol, d)
        m, s = m + 3 * d, s + 3 * d
        assert validate_solution(muffin(m, s), nxt) is None
        assert s * nxt.value == (s - 3 * d) * sol.value + d
        assert nxt.value == solve_recursive(muffin(m, s)).value
        sol = nxt
