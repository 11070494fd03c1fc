"""Non-recursive constructive solvers: two-column greedy passes and the t-even / u=v+1 builders."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import tick
from .problem import Dap3, Solution

__all__ = [
    "GreedyTrace",
    "greedy_2x2",
    "greedy_2x2_trace",
    "greedy_optimal_value",
    "greedy_general",
    "solve_t_even",
    "solve_t_even_general",
    "solve_u_eq_v_plus_1",
]

F = Fraction


@dataclass(frozen=True)
class GreedyTrace:
    y: tuple
    z: tuple
    assignments: tuple
    epsilon: Fraction


def _shift(y: list, z: list) -> Fraction:
    eps = (min(z) - min(y)) / 2
    y[:] = [a + eps for a in y]
    z[:] = [a - eps for a in z]
    tick(2 * len(y))
    return eps


def _supply_rows(y: list, z: list) -> list:
    return [(y[0], z[-1])] + [(y[i], z[i - 1]) for i in range(1, len(y))]


def greedy_2x2_trace(p: Dap3) -> tuple:
    if (p.t, p.u, p.v) != (2, 2, 2):
        raise ValueError("greedy needs t = u = v = 2")
    if p.s_t != p.s_u + p.s_v or p.s_u * p.x_u + p.s_v * p.x_v != p.s_t * p.x_t:
        raise ValueError("row counts or sums inconsistent")
    if not p.x_u < p.x_v:
        raise ValueError("greedy needs x_u < x_v")
    x_t, x_u, x_v = p.x_t, p.x_u, p.x_v
    threshold = (x_t + p.lam) / 2
    y, z, dest = [x_t / 2], [], []
    left = {"U": p.s_u, "V": p.s_v}
    for i in range(p.s_t):
        zu = x_u - y[i]
        if zu > threshold:
            z.append(zu)
            dest.append("U")
        else:
            z.append(x_v - y[i])
            dest.append("V")
        left[dest[-1]] -= 1
        if left[dest[-1]] < 0:
            raise AssertionError("greedy overfilled a demand matrix")
        if i < p.s_t - 1:
            y.append(x_t - z[i])
        tick(6)
    if z[-1] != x_t / 2:
        raise AssertionError("greedy failed to close the first supply row")
    eps = _shift(y, z)
    U = [(y[i], z[i]) for i in range(p.s_t) if dest[i] == "U"]
    V = [(y[i], z[i]) for i in range(p.s_t) if dest[i] == "V"]
    sol = Solution.build(_supply_rows(y, z), U, V)
    return sol, GreedyTrace(tuple(y), tuple(z), tuple(enumerate(dest)), eps)


def greedy_2x2(p: Dap3) -> Solution:
    """Optimal solution of a problem with t = u = v = 2."""
    return greedy_2x2_trace(p)[0]


def greedy_optimal_value(p: Dap3) -> Fraction:
    """Closed-form optimum x_t/2 + (lambda/2)(a+b-1)/(a+b) where (s_u, s_v) = g (a, b)."""
    if (p.t, p.u, p.v) != (2, 2, 2):
        raise ValueError("needs t = u = v = 2")
    if p.s_v == 0:
        raise ValueError("needs s_v > 0")
    g = math.gcd(p.s_u, p.s_v)
    a, b = p.s_u // g, p.s_v // g
    return p.x_t / 2 + p.lam / 2 * F(a + b - 1, a + b)


def greedy_general(s: int, x_t, demands: Sequence) -> tuple:
    """Cut ``s`` two-piece supply rows so sink j receives two pieces summing to demands[j].

    Returns (supply rows, sink rows) with sink rows in input order.
    """
    x_t = F(x_t)
    demands = [F(x) for x in demands]
    if len(demands) != s or sum(demands) != s * x_t:
        raise ValueError("demands must number s and sum to s x_t")
    if min(demands) == max(demands):
        raise ValueError("greedy needs at least two distinct demands")
    waiting: dict = {}
    for j, x in enumerate(demands):
        waiting.setdefault(x, []).append(j)
    for ids in waiting.values():
        ids.reverse()
    y, z, sink_of = [x_t / 2], [], []
    for i in range(s):
        values = sorted(waiting)
        k = 0
        while k + 1 < len(values) and not y[i] < (values[k] + values[k + 1] - x_t) / 2:
            k += 1
        x = values[k]
        j = waiting[x].pop()
        if not waiting[x]:
            del waiting[x]
        sink_of.append(j)
        z.append(x - y[i])
        if i < s - 1:
            y.append(x_t - z[i])
        tick(6)
    if z[-1] != x_t / 2:
        raise AssertionError("greedy failed to close the first supply row")
    _shift(y, z)
    rows = [None] * s
    for i, j in enumerate(sink_of):
        rows[j] = (y[i], z[i])
    return _supply_rows(y, z), rows


def _chunk_pairs(pairs: list, t: int) -> list:
    half = t // 2
    return [tuple(c for pr in pairs[i:i + half] for c in pr) for i in range(0, len(pairs), half)]


def solve_t_even_general(s_t: int, t: int, x_t, demands: Sequence) -> tuple:
    """Supply matrix s_t x t (t even) against demand rows given as (length, rowsum).

    Returns (T rows, demand rows) with demand rows in input order.
    """
    x_t = F(x_t)
    demands = [(int(k), F(x)) for k, x in demands]
    if t % 2 or t < 2:
        raise ValueError("t must be even")
    if sum(k for k, _ in demands) != t * s_t or sum(x for _, x in demands) != s_t * x_t:
        raise ValueError("demand lengths or sums inconsistent")
    if any(k < 2 for k, _ in demands):
        raise ValueError("every demand row needs at least two cells")
    c = x_t / t
    n_const = t * s_t // 2 - len(demands)
    residual = [x - (k - 2) * c for k, x in demands]
    if min(residual) == max(residual):
        g_rows = [(c, c)] * len(demands)
        pieces = [(c, c)] * len(demands)
    else:
        g_rows, pieces = greedy_general(len(demands), 2 * c, residual)
    tick(2 * n_const + sum(k - 2 for k, _ in demands))
    T = _chunk_pairs([(c, c)] * n_const + list(g_rows), t)
    rows = [(c,) * (k - 2) + tuple(pc) for (k, _), pc in zip(demands, pieces)]
    return T, rows


def solve_t_even(p: Dap3) -> Solution:
    """Constant-fill all but two cells of each demand row, then run the two-column greedy."""
    if p.t % 2:
        raise ValueError("t must be even")
    c = p.x_t / p.t
    n_const = p.n_t // 2 - p.s_u - p.s_v
    if n_const < 0 or p.u < 2 or p.v < 2:
        raise ValueError("demand rows need at least two cells")
    xu, xv = p.x_u - (p.u - 2) * c, p.x_v - (p.v - 2) * c
    tick(2 * n_const + (p.u - 2) * p.s_u + (p.v - 2) * p.s_v)
    n = p.s_u + p.s_v
    if p.s_u == 0 or p.s_v == 0 or xu == xv:
        g_T, g_U, g_V = [(c, c)] * n, [(c, c)] * p.s_u, [(c, c)] * p.s_v
    else:
        lo, hi = (xu, xv) if xu < xv else (xv, xu)
        s_lo, s_hi = (p.s_u, p.s_v) if xu < xv else (p.s_v, p.s_u)
        g = greedy_2x2(Dap3(2, 2, 2, n, s_lo, s_hi, 2 * c, lo, hi))
        g_T = list(g.T)
        g_U, g_V = (g.U, g.V) if xu < xv else (g.V, g.U)
    T = _chunk_pairs([(c, c)] * n_const + g_T, p.t)
    U = [(c,) * (p.u - 2) + tuple(r) for r in g_U]
    V = [(c,) * (p.v - 2) + tuple(r) for r in g_V]
    return Solution.build(T, U, V)


def _round_robin(p: Dap3, mu: Fraction) -> tuple:
    """Insert s_t copies of mu column by column: U col 1, V col 1, U col 2, ..."""
    filled_u, filled_v = [0] * p.s_u, [0] * p.s_v
    left = p.s_t
    col = 0
    while left:
        for filled, width in ((filled_u, p.u), (filled_v, p.v)):
            if col >= width:
                continue
            for i in range(len(filled)):
                if not left:
                    break
                filled[i] += 1
                left -= 1
        col += 1
        if col > p.u and left:
            raise AssertionError("more supply rows than demand cells")
    tick(2 * p.s_t)
    return filled_u, filled_v


def _solve_sub(sub: Dap3) -> Solution:
    return solve_t_even(sub)


def solve_u_eq_v_plus_1(p: Dap3, strict: bool = True) -> Solution:
    """Lower-bound builder for u = v + 1: min >= lambda (weak) or min > lambda (strict)."""
    if p.u != p.v + 1:
        raise ValueError("needs u = v + 1")
    if p.v < 2:
        raise ValueError("needs v >= 2")
    if p.t % 2 == 0:
        return solve_t_even(p)
    t, x_t, x_u, x_v = p.t, p.x_t, p.x_u, p.x_v
    lam = p.lam
    if p.s_t >= (p.u - 2) * p.s_u + (p.v - 2) * p.s_v:
        if (p.u, p.v) != (3, 2):
            raise AssertionError("branch requires u = 3, v = 2")
        if not strict:
            if p.s_t == p.s_u:
                h = x_v / 2
                tick(p.n_t + p.n_u + p.n_v)
                return Solution.build([(lam,) + (h,) * (t - 1)] * p.s_t,
                                      [(lam, h, h)] * p.s_u, [(h, h)] * p.s_v)
            sub = Dap3(2, t, t - 1, p.s_u + p.s_v, p.s_t - p.s_u, p.s_u, x_v, x_t, x_t - lam)
            s = _solve_sub(sub)
            tick(p.s_u)
            U = [(lam,) + r for r in s.T[: p.s_u]]
            V = list(s.T[p.s_u:])
            T = list(s.U) + [(lam,) + r for r in s.V]
            return Solution.build(T, U, V)
        a = x_u / 3
        if p.n_u < p.s_t:
            sub = Dap3(2, t, t - 1, p.s_v, p.s_t - p.n_u, p.n_u, x_v, x_t, x_t - a)
            s = _solve_sub(sub)
            tick(2 * p.n_u)
            T = list(s.U) + [(a,) + r for r in s.V]
            return Solution.build(T, [(a, a, a)] * p.s_u, s.T)
        if p.n_u == p.s_t:
            h = x_v / 2
            tick(p.n_t + p.n_u + p.n_v)
            return Solution.build([(a,) + (h,) * (t - 1)] * p.s_t, [(a, a, a)] * p.s_u, [(h, h)] * p.s_v)
        if (p.s_t - p.s_u) % 2:
            raise AssertionError("s_t - s_u must be even here")
        r_u = (p.s_t - p.s_u) // 2
        sub = Dap3(t - 1, 2, 2, p.s_t, p.s_u - r_u, p.s_v, x_t - a, 2 * x_u / 3, x_v)
        s = _solve_sub(sub)
        tick(2 * p.s_t)
        T = [(a,) + r for r in s.T]
        U = [(a, a, a)] * r_u + [(a,) + r for r in s.U]
        return Solution.build(T, U, s.V)
    mu = lam if not strict else x_t / t
    filled_u, filled_v = _round_robin(p, mu)
    if not strict:
        counts = {p.u - k for k in filled_u} | {p.v - k for k in filled_v}
        if len(counts) == 1:
            c = (x_t - lam) / (t - 1)
            tick(p.n_t + p.n_u + p.n_v)
            T = [(lam,) + (c,) * (t - 1)] * p.s_t
            U = [(lam,) * k + (c,) * (p.u - k) for k in filled_u]
            V = [(lam,) * k + (c,) * (p.v - k) for k in filled_v]
            return Solution.build(T, U, V)
        v_p = min(counts)
        u_p = v_p + 1
        rows = [("U", i, p.u - k) for i, k in enumerate(filled_u)] + \
               [("V", i, p.v - k) for i, k in enumerate(filled_v)]
        longs = [r for r in rows if r[2] == u_p]
        shorts = [r for r in rows if r[2] == v_p]
        x_up = x_u - (p.u - u_p) * lam
        sub = Dap3(t - 1, u_p, v_p, p.s_t, len(longs), len(shorts), x_t - lam, x_up, x_up - lam)
        s = _solve_sub(sub)
        out = {}
        for r, cells in zip(longs, s.U):
            out[r[:2]] = cells
        for r, cells in zip(shorts, s.V):
            out[r[:2]] = cells
        T = [(lam,) + r for r in s.T]
        U = [(lam,) * k + out[("U", i)] for i, k in enumerate(filled_u)]
        V = [(lam,) * k + out[("V", i)] for i, k in enumerate(filled_v)]
        return Solution.build(T, U, V)
    demands = [(p.u - k, x_u - k * mu) for k in filled_u] + [(p.v - k, x_v - k * mu) for k in filled_v]
    T_sub, rows = solve_t_even_general(p.s_t, t - 1, x_t - mu, demands)
    T = [(mu,) + r for r in T_sub]
    U = [(mu,) * k + r for k, r in zip(filled_u, rows[: p.s_u])]
    V = [(mu,) * k + r for k, r in zip(filled_v, rows[p.s_u:])]
    return Solution.build(T, U, V)
