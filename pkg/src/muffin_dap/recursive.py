"""Optimal solvers: both kinds of 0-problem, problem reduction, the recursive solver and its variant."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable

from .base import solve_t_even, solve_u_eq_v_plus_1
from .classify import _kind, reduced_problem
from .exact import tick
from .pairs import complete_pair, pair_shape, pair_u_count
from .problem import Dap3, ReductionStep, Solution, validate_dap3

__all__ = [
    "solve_zero_type1",
    "solve_zero_type2",
    "reduce_problem",
    "solve_recursive",
    "solve_huddleston",
    "n2_alt_reduce",
    "n2_expand",
]

F = Fraction


def _uniform(p: Dap3) -> Solution:
    a = p.x_u / p.u
    tick(p.n_t + p.n_u)
    return Solution.build([(a,) * p.t] * p.s_t, [(a,) * p.u] * p.s_u, [(a,) * p.v] * p.s_v)


def _zero1_split(p: Dap3) -> tuple:
    """Sub-problem of a type-1 0-problem: T' = V, U'/V' are the unfilled tails of T rows."""
    a = p.x_u / p.u
    q_t, r_t = divmod(p.n_u, p.s_t)
    sub = Dap3(p.v, p.t - q_t, p.t - q_t - 1, p.s_v, p.s_t - r_t, r_t,
               p.x_v, p.x_t - q_t * a, p.x_t - (q_t + 1) * a)
    return sub, q_t


def _zero1_join(p: Dap3, q_t: int, s: Solution) -> Solution:
    a = p.x_u / p.u
    tick(p.n_t + p.n_u)
    T = [(a,) * q_t + r for r in s.U] + [(a,) * (q_t + 1) + r for r in s.V]
    return Solution.build(T, [(a,) * p.u] * p.s_u, s.T)


def solve_zero_type1(p: Dap3) -> Solution:
    """Problems with s_t <= (v-1) s_v, solved with value x_u/u."""
    if not (p.v > 1 and p.s_v > 0 and p.s_t <= (p.v - 1) * p.s_v):
        raise ValueError("needs s_t <= (v-1) s_v")
    a = p.x_u / p.u
    q_t, r_t = divmod(p.n_u, p.s_t)
    if r_t == 0:
        b = p.x_v / p.v
        tick(p.n_t + p.n_u + p.n_v)
        return Solution.build([(a,) * q_t + (b,) * (p.t - q_t)] * p.s_t,
                              [(a,) * p.u] * p.s_u, [(b,) * p.v] * p.s_v)
    if q_t < p.t - 2:
        sub, q_t = _zero1_split(p)
        return _zero1_join(p, q_t, solve_u_eq_v_plus_1(sub, strict=True))
    rho = p.x_t - (p.t - 1) * a
    x_tp = rho + a
    q_v, r_v = divmod(r_t, p.s_v)
    head = [(a,) * (p.t - 1) + (rho,)] * r_t
    U = [(a,) * p.u] * p.s_u
    tick(p.n_t + p.n_u)
    if r_v == 0:
        sigma = x_tp / 2
        T = head + [(a,) * (p.t - 2) + (sigma, sigma)] * (p.s_t - r_t)
        V = [(rho,) * q_v + (sigma,) * (p.v - q_v)] * p.s_v
        return Solution.build(T, U, V)
    sub = Dap3(2, p.v - q_v - 1, p.v - q_v, p.s_t - r_t, r_v, p.s_v - r_v,
               x_tp, p.x_v - (q_v + 1) * rho, p.x_v - q_v * rho)
    s = solve_t_even(sub)
    T = head + [(a,) * (p.t - 2) + r for r in s.T]
    V = [(rho,) * (q_v + 1) + r for r in s.U] + [(rho,) * q_v + r for r in s.V]
    return Solution.build(T, U, V)


def solve_zero_type2(p: Dap3) -> Solution:
    """Problems with integral b* = 2 s_v / r_v: r_v/2 copies of one b*-pair, value x_u/u."""
    kind, b, r_v, _ = _kind(p)
    if kind != "Zero2":
        raise ValueError("needs integral b* = 2 s_v / r_v")
    if p.s_v == 0:
        return _uniform(p)
    a = p.x_u / p.u
    pair = complete_pair(b, p.x_t, p.x_v, p.t, p.v, (a,) * pair_u_count(p.t, p.v, b))
    k = r_v // 2
    tick(p.n_t + p.n_u + p.n_v)
    return Solution.build(list(pair.A) * k, [(a,) * p.u] * p.s_u, list(pair.B) * k)


def reduce_problem(p: Dap3) -> tuple:
    kind, b, _, _ = _kind(p)
    if kind != "Reducible":
        raise ValueError("problem is a 0-problem")
    child = reduced_problem(p, b)
    return child, ReductionStep(b, pair_shape(p.t, p.u, p.v, b), child)


def _expand(p: Dap3, b: int, child: Solution) -> Solution:
    """Rebuild the parent from the child's solution: U is the child's T, each child row becomes a pair."""
    T, V = [], []
    for row in child.U:
        pr = complete_pair(b, p.x_t, p.x_v, p.t, p.v, row)
        T.extend(pr.A)
        V.extend(pr.B)
    for row in child.V:
        if b == 1:
            T.append(row)
            tick(len(row))
        else:
            pr = complete_pair(b - 1, p.x_t, p.x_v, p.t, p.v, row)
            T.extend(pr.A)
            V.extend(pr.B)
    tick(p.n_u)
    return Solution.build(T, child.T, V)


def _checked(p: Dap3) -> None:
    err = validate_dap3(p)
    if err:
        raise ValueError(f"invalid problem: {err}")


def solve_recursive(p: Dap3) -> Solution:
    """Optimal solution by repeated reduction to a 0-problem and pair-wise reconstruction."""
    _checked(p)
    steps = []
    cur = p
    while True:
        kind, b, _, _ = _kind(cur)
        if kind != "Reducible":
            break
        child = reduced_problem(cur, b)
        steps.append((cur, b, child))
        cur = child
    sol = solve_zero_type1(cur) if kind == "Zero1" else solve_zero_type2(cur)
    for parent, b, _ in reversed(steps):
        sol = _expand(parent, b, sol)
    trace = tuple(ReductionStep(b, pair_shape(q.t, q.u, q.v, b), c) for q, b, c in steps)
    return Solution(sol.T, sol.U, sol.V, sol.value, trace)


def solve_huddleston(p: Dap3) -> Solution:
    """Variant that recurses on type-1 sub-problems and reduces type-2 0-problems."""
    _checked(p)
    frames = []
    cur = p
    while True:
        if cur.s_v == 0:
            sol = _uniform(cur)
            break
        if cur.s_t <= (cur.v - 1) * cur.s_v:
            if cur.n_u % cur.s_t == 0:
                sol = solve_zero_type1(cur)
                break
            sub, q_t = _zero1_split(cur)
            frames.append(("zero1", cur, q_t, sub))
            cur = sub
            continue
        b = -(-cur.s_v // (cur.s_t - (cur.v - 1) * cur.s_v))
        child = reduced_problem(cur, b)
        frames.append(("reduce", cur, b, child))
        cur = child
    for kind, parent, k, _ in reversed(frames):
        sol = _zero1_join(parent, k, sol) if kind == "zero1" else _expand(parent, k, sol)
    trace = tuple(ReductionStep(k, pair_shape(q.t, q.u, q.v, k), c)
                  for kind, q, k, c in frames if kind == "reduce")
    return Solution(sol.T, sol.U, sol.V, sol.value, trace)


def _order2_shape(sol: Solution) -> tuple:
    if not sol.U or any(len(r) != 3 for r in sol.U) or any(len(r) != 2 for r in sol.V) \
            or any(len(r) != 2 for r in sol.T):
        raise ValueError("expected a fully-constrained order-2 muffin solution")
    m, s = len(sol.T), len(sol.U) + len(sol.V)
    return m, s, sum(sol.U[0])


def _map(h: Callable, rows) -> list:
    return [tuple(h(c) for c in r) for r in rows]


def n2_alt_reduce(sol: Solution) -> Solution:
    """Turn a solution of the order-2 problem (m, s) into one of (m - 3d, s - 3d), d = m - s."""
    m, s, x = _order2_shape(sol)
    d = m - s
    b = m // (3 * d)
    if b < 2:
        raise ValueError("alternative reduction needs b >= 2")
    t_rows = Counter(tuple(sorted(r)) for r in sol.T)
    for row in sol.U:
        for y in row:
            key = tuple(sorted((y, 1 - y)))
            if not t_rows[key]:
                raise ValueError("a T-row holds two U-elements")
            t_rows[key] -= 1
    T_p = [(1 - z, 1 - w) for z, w in sol.V]
    V_p = [(1 - z, z) for (z, _), k in t_rows.items() for _ in range(k)]
    s_prev = s - 3 * d

    def h(y):
        return (s * y - d) / s_prev

    tick(2 * (len(T_p) + len(V_p)) + 3 * len(sol.U))
    return Solution.build(_map(h, T_p), _map(h, sol.U), _map(h, V_p))


def n2_expand(sol: Solution, d: int) -> Solution:
    """Turn a solution of the order-2 problem (m, s) into one of (m + 3d, s + 3d)."""
    if d == 0:
        return sol
    m, s, _ = _order2_shape(sol)
    if any(c < 0 for r in sol.U for c in r):
        raise ValueError("expansion needs nonnegative U-elements")
    s_next = s + 3 * d
    x = F(m + 3 * d, s_next)

    def h_inv(z):
        return (s * z + d) / s_next

    T_p, U_p, V_p = _map(h_inv, sol.T), _map(h_inv, sol.U), _map(h_inv, sol.V)
    T = [(y, 1 - y) for r in U_p for y in r] + [(1 - y, y) for y, _ in V_p]
    V = [(1 - y, x + y - 1) for y, _ in T_p]
    tick(2 * (len(T) + len(V)) + 3 * len(U_p))
    return Solution.build(T, U_p, V)
