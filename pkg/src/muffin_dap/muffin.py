"""Muffin problems f(m, s): special cases, the 1/3 construction, supply-constrained optima and the order-2 closed form."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .base import greedy_2x2, solve_t_even_general
from .problem import Dap3, MuffinSpec, Solution, muffin_to_dap3
from .recursive import solve_recursive

__all__ = [
    "Route",
    "MuffinAnswer",
    "PieceAssignment",
    "muffin_value",
    "one_third_solution",
    "alt_supply_solution",
    "n2_closed_form",
]

F = Fraction
THIRD = F(1, 3)


class Route(enum.Enum):
    TRIVIAL = "trivial"
    RECIPROCAL = "reciprocal"
    ONE_THIRD = "one-third"
    RECURSIVE = "recursive"
    CLOSED_FORM_N2 = "closed-form-n2"


@dataclass(frozen=True)
class MuffinAnswer:
    f: Fraction
    g: Optional[Fraction]
    route: Route
    solution: Optional[Solution] = None


@dataclass(frozen=True)
class PieceAssignment:
    """Muffin rows (pieces of each muffin) and student rows (pieces each student receives)."""

    m: int
    s: int
    muffins: tuple
    students: tuple

    @property
    def value(self) -> Fraction:
        return min(c for r in self.muffins for c in r)


def muffin_value(m: int, s: int, with_solution: bool = False) -> MuffinAnswer:
    MuffinSpec(m, s)
    if s == 1 or m % s == 0:
        return MuffinAnswer(F(1), None, Route.TRIVIAL)
    if (2 * m) % s == 0:
        return MuffinAnswer(F(1, 2), None, Route.TRIVIAL)
    if m < s:
        return MuffinAnswer(F(m, s) * _f(s, m), None, Route.RECIPROCAL)
    sol = solve_recursive(muffin_to_dap3(MuffinSpec(m, s)))
    g = sol.value
    route = Route.ONE_THIRD if g < THIRD else Route.RECURSIVE
    return MuffinAnswer(max(THIRD, g), g, route, sol if with_solution else None)


@lru_cache(maxsize=None)
def _f(m: int, s: int) -> Fraction:
    return muffin_value(m, s).f


def one_third_solution(m: int, s: int) -> PieceAssignment:
    """Feasible division with every piece at least 1/3."""
    if not m > s:
        raise ValueError("needs m > s")
    x = F(m, s)
    k = (3 * m) // s
    thirds = [(THIRD,) * 3] * (m - s)
    if (3 * m) % s == 0:
        half = F(1, 2)
        return PieceAssignment(m, s, tuple(thirds + [(half, half)] * s),
                               tuple([(THIRD,) * (k - 3) + (half, half)] * s))
    s_u, s_v = 3 * m - k * s, (k + 1) * s - 3 * m
    g = greedy_2x2(Dap3(2, 2, 2, s, s_u, s_v, F(1), x - F(k - 2, 3), x - F(k - 3, 3)))
    students = [(THIRD,) * (k - 2) + r for r in g.U] + [(THIRD,) * (k - 3) + r for r in g.V]
    return PieceAssignment(m, s, tuple(thirds + list(g.T)), tuple(students))


def alt_supply_solution(m: int, s: int) -> PieceAssignment:
    """Optimal division in which some student receives n + 2 pieces (not fully constrained)."""
    if not m > s:
        raise ValueError("needs m > s")
    n = (2 * m) // s
    x = F(m, s)
    low = F(n * (n + 2), 2 * (n + 1))
    if n < 2 or not (low <= x < F(n + 1, 2)):
        raise ValueError("x outside [n(n+2)/(2(n+1)), (n+1)/2)")
    if x == low:
        d = s // (n + 1)
        small, large = F(n, 2 * (n + 1)), F(n + 2, 2 * (n + 1))
        muffins = [(small, large)] * m
        students = [(small,) * (n + 2)] * (n * d // 2) + [(large,) * n] * ((n + 2) * d // 2)
        return PieceAssignment(m, s, tuple(muffins), tuple(students))
    lo = 1 - x / n
    hi = x / n
    alpha = (2 + F(1, n)) * x - (n + 1)
    beta = (n + 2) - (2 + F(1, n)) * x
    n_v = (n + 1) * s - 2 * m + 1
    rows_u = 2 * m - n * s - 2
    K = n * ((n + 1) * s - 2 * m) - 1
    q, r = divmod(K, rows_u)
    cut = n * n_v
    rest = m - cut - 1
    demands = ([(n + 1 - q, x - q * lo)] * (rows_u - 1 - r)
               + [(n - q, x - q * lo - beta)]
               + [(n - q, x - (q + 1) * lo)] * r)
    T_sub, rows = solve_t_even_general(rest, 2, F(1), demands)
    prefixes = ([(lo,) * q] * (rows_u - 1 - r) + [(lo,) * q + (beta,)] + [(lo,) * (q + 1)] * r)
    muffins = [(hi, lo)] * cut + [(alpha, beta)] + list(T_sub)
    students = ([(hi,) * n] * n_v + [(lo,) * (n + 1) + (alpha,)]
                + [p + row for p, row in zip(prefixes, rows)])
    return PieceAssignment(m, s, tuple(muffins), tuple(students))


def n2_closed_form(m: int, s: int) -> Fraction:
    """Fully-constrained optimum of an order-2 problem from m = 3db + a, s = 3db + a - d."""
    if not m > s or (2 * m) // s != 2 or (2 * m) % s == 0:
        raise ValueError("needs 1 < m/s < 3/2")
    d = m - s
    b, a = divmod(m, 3 * d)
    if b < 1:
        raise ValueError("decomposition needs b >= 1")
    if a == 0:
        X = F(0)
    elif a <= d or (2 * d) % (a - d) == 0:
        X = F(a - d, 2)
    else:
        X = (a - d) * _f(a, a - d)
    return (d * b + X) / (3 * d * b + a - d)
