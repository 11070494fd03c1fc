"""Shared instances: the worked 3M-DAP example and its two solutions, plus the two scanned families."""

from fractions import Fraction as F

from muffin_dap import Dap3, FamilyParams, Solution

WORKED = Dap3(t=2, u=2, v=6, s_t=7, s_u=4, s_v=1, x_t=F(1), x_u=F(4, 5), x_v=F(19, 5))

a, b, c, d, e, g, h = F(3, 10), F(7, 10), F(2, 5), F(3, 5), F(1, 2), F(1, 2), F(1, 2)

WORKED_T = [(a, b)] * 2 + [(c, d)] * 4 + [(e, e)]
WORKED_U = [(a, e)] * 2 + [(c, c)] * 2
WORKED_V = [(b, b, d, d, d, d)]
WORKED_SOLUTION = Solution.build(WORKED_T, WORKED_U, WORKED_V)

ALT_SOLUTION = Solution.build(
    [(e, e)] + [(a, b)] * 4 + [(e, e)] * 2,
    [(a, e)] * 4,
    [(e, e, b, b, b, b)],
)

FAMILY_N3 = FamilyParams(2, 4, 3, F(0), F(1, 2), 420)
FAMILY_WIDE_V = FamilyParams(2, 2, 6, F(-3), F(1, 2), 420)
