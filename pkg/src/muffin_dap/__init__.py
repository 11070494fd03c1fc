"""Exact solvers for three-matrix division and assignment problems and the muffin problem."""

from .base import (greedy_2x2, greedy_general, greedy_optimal_value, solve_t_even,
                   solve_t_even_general, solve_u_eq_v_plus_1)
from .classify import (Classification, bound_L, bound_M, classify, depth, pair_average_limit,
                       pair_average_z, tau, x_infinity, x_threshold, xhat)
from .exact import PieceMultiset, Rat, RatMatrix, count_ops, multiset_of, rat_format, rat_parse, rowsums
from .muffin import MuffinAnswer, Route, alt_supply_solution, muffin_value, n2_closed_form, one_third_solution
from .oracle import brute_force_value, rational_maxmin_lp, validate_assignment, validate_solution
from .pairs import BPair, complete_pair, pair_shape
from .problem import (Dap3, EquivMap, FamilyParams, MuffinSpec, ParamClass, ReductionStep, Solution,
                      apply_equiv, family_member_from_x, family_members, muffin_to_dap3, param_classes,
                      standardize, validate_dap3)
from .recursive import (n2_alt_reduce, n2_expand, reduce_problem, solve_huddleston, solve_recursive,
                        solve_zero_type1, solve_zero_type2)

__version__ = "0.1.0"
