"""Independent certification: solution validation and a brute-force optimum for tiny muffin problems."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Optional, Sequence

from .exact import multiset_of, rowsums
from .problem import Dap3, Solution

__all__ = [
    "ScaleError",
    "validate_solution",
    "validate_assignment",
    "simplex_max",
    "rational_maxmin_lp",
    "structures",
    "brute_force_value",
    "ORACLE_MAX_M",
    "ORACLE_MAX_S",
]

F = Fraction
ORACLE_MAX_M = 6
ORACLE_MAX_S = 5


class ScaleError(ValueError):
    """Instance is beyond the oracle's desk-scale bounds."""


def _check_shape(name: str, rows, count: int, width: int) -> Optional[str]:
    if len(rows) != count:
        return f"{name} has {len(rows)} rows, expected {count}"
    if any(len(r) != width for r in rows):
        return f"{name} rows must have {width} cells"
    return None


def validate_solution(p: Dap3, sol: Solution) -> Optional[str]:
    """None when ``sol`` fills ``p`` exactly, else a description of the first defect."""
    for name, rows, count, width in (("T", sol.T, p.s_t, p.t), ("U", sol.U, p.s_u, p.u), ("V", sol.V, p.s_v, p.v)):
        err = _check_shape(name, rows, count, width)
        if err:
            return err
    for name, rows, x in (("T", sol.T, p.x_t), ("U", sol.U, p.x_u), ("V", sol.V, p.x_v)):
        for i, r in enumerate(rowsums(rows)):
            if r != x:
                return f"{name} row {i} sums to {r}, expected {x}"
    if multiset_of([sol.T]) != multiset_of([sol.U, sol.V]):
        return "multiset of T differs from multiset of U and V"
    true_min = min(c for m in (sol.T, sol.U, sol.V) for r in m for c in r)
    if sol.value != true_min:
        return f"value {sol.value} differs from minimum cell {true_min}"
    return None


def validate_assignment(m: int, s: int, muffins: Sequence, students: Sequence) -> Optional[str]:
    """None when muffins (rows summing to 1) and students (rows summing to m/s) share one piece multiset."""
    x = F(m, s)
    if len(muffins) != m or len(students) != s:
        return "wrong number of muffins or students"
    if any(r != 1 for r in rowsums(muffins)):
        return "a muffin does not sum to 1"
    if any(r != x for r in rowsums(students)):
        return "a student does not receive m/s"
    if any(c <= 0 for r in muffins for c in r):
        return "non-positive piece"
    if multiset_of([muffins]) != multiset_of([students]):
        return "muffin pieces and student pieces differ"
    return None


def _pivot(tab: list, r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c]:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, tab[r])]


def _run(tab: list, basis: list, cost: list, allowed: int) -> None:
    """Maximize cost over the tableau with Bland's rule; columns >= allowed never enter."""
    while True:
        m = len(basis)
        reduced = [cost[j] - sum(cost[basis[i]] * tab[i][j] for i in range(m)) for j in range(allowed)]
        enter = next((j for j in range(allowed) if reduced[j] > 0), None)
        if enter is None:
            return
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ValueError("unbounded")
        _pivot(tab, best[1], enter)
        basis[best[1]] = enter


def simplex_max(c: Sequence, A: Sequence, b: Sequence) -> tuple:
    """Maximize c.x subject to A x = b, x >= 0, exactly. Returns (value, x)."""
    c = [F(v) for v in c]
    n = len(c)
    rows = []
    for a_row, rhs in zip(A, b):
        a_row, rhs = [F(v) for v in a_row], F(rhs)
        if rhs < 0:
            a_row, rhs = [-v for v in a_row], -rhs
        rows.append((a_row, rhs))
    m = len(rows)
    tab = [a + [F(int(i == k)) for k in range(m)] + [rhs] for i, (a, rhs) in enumerate(rows)]
    basis = [n + i for i in range(m)]
    _run(tab, basis, [F(0)] * n + [F(-1)] * m, n)
    if any(basis[i] >= n and tab[i][-1] != 0 for i in range(m)):
        raise ValueError("infeasible")
    keep = []
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if tab[i][j] != 0), None)
            if j is None:
                continue
            _pivot(tab, i, j)
            basis[i] = j
        keep.append(i)
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    _run(tab, basis, c, n)
    x = [F(0)] * n
    for i, j in enumerate(basis):
        x[j] = tab[i][-1]
    return sum(ci * xi for ci, xi in zip(c, x)), x


def rational_maxmin_lp(n_pieces: int, equalities: Sequence) -> tuple:
    """Maximize the smallest of ``n_pieces`` nonnegative pieces under equalities (indices, rhs).

    Returns (z, pieces). Pieces are written as z + slack so every variable is nonnegative.
    """
    A, b = [], []
    for idx, rhs in equalities:
        row = [F(0)] * (n_pieces + 1)
        row[0] = F(len(idx))
        for i in idx:
            row[1 + i] += 1
        A.append(row)
        b.append(F(rhs))
    z, sol = simplex_max([1] + [0] * n_pieces, A, b)
    return z, [z + q for q in sol[1:]]


def _canonical(struct: tuple, s: int, perms: list) -> tuple:
    return min(tuple(sorted(tuple(sorted(p[i] for i in muffin)) for muffin in struct)) for p in perms)


def structures(m: int, s: int) -> list:
    """Muffin-to-student incidence structures up to student relabeling.

    Each muffin is cut into 2 or 3 pieces; student degrees lie in [2, floor(3m/s)].
    """
    cap = (3 * m) // s
    options = [c for k in (2, 3) for c in combinations_with_replacement(range(s), k)]
    deg = [0] * s
    out = set()
    perms = list(permutations(range(s)))
    chosen = []

    def rec(start: int) -> None:
        if len(chosen) == m:
            if all(2 <= deg[i] for i in range(s)) and all(deg[i] >= deg[i + 1] for i in range(s - 1)):
                out.add(_canonical(tuple(chosen), s, perms))
            return
        left = m - len(chosen)
        total_needed = sum(max(0, 2 - d) for d in deg)
        if total_needed > 3 * left:
            return
        for k in range(start, len(options)):
            opt = options[k]
            for i in opt:
                deg[i] += 1
            if all(deg[i] <= cap for i in opt):
                chosen.append(opt)
                rec(k)
                chosen.pop()
            for i in opt:
                deg[i] -= 1

    rec(0)
    return sorted(out)


def _structure_lp(m: int, s: int, struct: tuple) -> Optional[tuple]:
    x = F(m, s)
    pieces = []
    eqs = []
    for j, muffin in enumerate(struct):
        idx = []
        for st in muffin:
            idx.append(len(pieces))
            pieces.append((j, st))
        eqs.append((idx, 1))
    for st in range(s):
        eqs.append(([i for i, (_, who) in enumerate(pieces) if who == st], x))
    try:
        return rational_maxmin_lp(len(pieces), eqs)
    except ValueError:
        return None


def brute_force_value(m: int, s: int) -> Fraction:
    """Exact optimum of the muffin problem (m, s) by exhaustive structure enumeration."""
    if m > ORACLE_MAX_M or s > ORACLE_MAX_S:
        raise ScaleError(f"oracle limited to m <= {ORACLE_MAX_M}, s <= {ORACLE_MAX_S}")
    if not m > s or (2 * m) % s == 0:
        raise ValueError("oracle needs m > s and 2m/s non-integral")
    best = None
    for struct in structures(m, s):
        res = _structure_lp(m, s, struct)
        if res is not None and (best is None or res[0] > best):
            best = res[0]
    return best
