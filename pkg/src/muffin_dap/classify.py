"""Thresholds, classification into 0-problems and reducible problems, and value bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .pairs import pair_shape
from .problem import Dap3, FamilyParams

__all__ = [
    "Classification",
    "x_infinity",
    "x_threshold",
    "classify",
    "depth",
    "reduced_problem",
    "tau",
    "bound_L",
    "bound_M",
    "pair_average_z",
    "pair_average_limit",
    "xhat",
]

F = Fraction
Params = Union[FamilyParams, Dap3]


def _fam(f: Params) -> FamilyParams:
    return f.family() if isinstance(f, Dap3) else f


def x_infinity(f: Params) -> Fraction:
    f = _fam(f)
    t, u, v = f.t, f.u, f.v
    return (f.lam + f.gamma * (v - 1) * t) * u / ((v - 1) * t + u - v)


def x_threshold(f: Params, b: int) -> Fraction:
    f = _fam(f)
    if b < 0:
        raise ValueError("b >= 0 required")
    t, u, v = f.t, f.u, f.v
    return ((f.lam + f.gamma * (v - 1) * t) * u * b + f.gamma * t * u) / (((v - 1) * t + u - v) * b + t)


@dataclass(frozen=True)
class Classification:
    kind: str  # "Zero1", "Zero2" or "Reducible"
    b: Optional[int]
    r_v: int
    b_star: Optional[Fraction]
    depth_N: int = 0


def _kind(p: Dap3) -> tuple:
    r_v = 2 * (p.s_t - (p.v - 1) * p.s_v)
    if p.s_v == 0:
        return "Zero2", 0, r_v, F(0)
    if p.s_t <= (p.v - 1) * p.s_v:
        return "Zero1", None, r_v, None
    b_star = F(2 * p.s_v, r_v)
    if b_star.denominator == 1:
        return "Zero2", int(b_star), r_v, b_star
    b = -(-p.s_v // (p.s_t - (p.v - 1) * p.s_v))
    assert b == math.ceil(b_star)
    return "Reducible", b, r_v, b_star


def reduced_problem(p: Dap3, b: int) -> Dap3:
    """Child whose T is the parent's U, with one U-row per b-pair and one V-row per (b-1)-pair."""
    r_v = 2 * (p.s_t - (p.v - 1) * p.s_v)
    u_p, (a_t, a_v), v_p, (c_t, c_v) = pair_shape(p.t, p.u, p.v, b)
    s_u = p.s_v - (b - 1) * r_v // 2
    s_v = b * r_v // 2 - p.s_v
    return Dap3(p.u, u_p, v_p, p.s_u, s_u, s_v, p.x_u,
                a_t * p.x_t - a_v * p.x_v, c_t * p.x_t - c_v * p.x_v)


def depth(p: Dap3) -> int:
    n = 0
    while True:
        kind, b, _, _ = _kind(p)
        if kind != "Reducible":
            return n
        p = reduced_problem(p, b)
        n += 1


def classify(p: Dap3) -> Classification:
    kind, b, r_v, b_star = _kind(p)
    return Classification(kind, b, r_v, b_star, depth(p))


def tau(f: Params) -> Fraction:
    return x_infinity(f) / _fam(f).u


def bound_L(f: Params, b: int) -> Fraction:
    f = _fam(f)
    if b < 1:
        raise ValueError("b >= 1 required")
    d = (f.v - 1) * f.t - f.v
    return f.gamma - b * (x_threshold(f, b - 1) - f.lam - f.gamma * f.v) / (d * b + f.t)


def bound_M(f: Params, b: int) -> Fraction:
    f = _fam(f)
    d = (f.v - 1) * f.t - f.v
    return F(b * (d * (b - 1) + f.t), ((d + f.u) * (b - 1) + f.t) * (d * b + f.t))


def pair_average_z(p: Dap3, k: int) -> Fraction:
    """Average U-element of a k-pair."""
    den = ((p.v - 1) * k + 1) * p.t - k * p.v
    if k < 0 or den <= 0:
        raise ValueError("need k >= 0 and a positive denominator")
    return (((p.v - 1) * k + 1) * p.x_t - k * p.x_v) / den


def pair_average_limit(p: Dap3) -> Fraction:
    """Limit of the k-pair average as k grows: ((v-1) x_t - x_v) / ((v-1) t - v)."""
    d = (p.v - 1) * p.t - p.v
    if d == 0:
        raise ValueError("(v-1) t - v = 0")
    return ((p.v - 1) * p.x_t - p.x_v) / d


def xhat(f: Params, x) -> Fraction:
    """x_u of the standardized child problem as a function of the parent's x_u."""
    f = _fam(f)
    x = F(x)
    xi = x_infinity(f)
    if x <= xi:
        raise ValueError("xhat is defined only for x > x_infinity")
    t, u, v = f.t, f.u, f.v
    return F(t, 2) * u * (x - f.lam - f.gamma * v) / (((v - 1) * t + u - v) * (x - xi))
