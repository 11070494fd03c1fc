"""Problem definitions: 3M-DAP instances, parameter families, muffin encodings and standard form."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import rat_format, rat_parse

__all__ = [
    "Dap3",
    "FamilyParams",
    "MuffinSpec",
    "ParamClass",
    "Solution",
    "ReductionStep",
    "EquivMap",
    "validate_dap3",
    "param_classes",
    "muffin_to_dap3",
    "family_member_from_x",
    "family_members",
    "standardize",
    "apply_equiv",
    "problem_to_json",
    "problem_from_json",
    "family_from_json",
    "solution_to_json",
    "solution_from_json",
]

F = Fraction


@dataclass(frozen=True)
class Dap3:
    """Supply matrix T (s_t x t) split into demand matrices U (s_u x u) and V (s_v x v)."""

    t: int
    u: int
    v: int
    s_t: int
    s_u: int
    s_v: int
    x_t: Fraction
    x_u: Fraction
    x_v: Fraction

    def __post_init__(self):
        for name in ("x_t", "x_u", "x_v"):
            object.__setattr__(self, name, F(getattr(self, name)))

    @property
    def n_t(self) -> int:
        return self.s_t * self.t

    @property
    def n_u(self) -> int:
        return self.s_u * self.u

    @property
    def n_v(self) -> int:
        return self.s_v * self.v

    @property
    def lam(self) -> Fraction:
        return self.x_u - self.x_v

    @property
    def gamma(self) -> Fraction:
        return self.x_t / self.t

    def family(self, s: Optional[int] = None) -> "FamilyParams":
        return FamilyParams(self.t, self.u, self.v, self.lam, self.gamma, s)

    def scaled(self, k: int) -> "Dap3":
        return Dap3(self.t, self.u, self.v, k * self.s_t, k * self.s_u, k * self.s_v,
                    self.x_t, self.x_u, self.x_v)


@dataclass(frozen=True)
class FamilyParams:
    t: int
    u: int
    v: int
    lam: Fraction
    gamma: Fraction
    s: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "lam", F(self.lam))
        object.__setattr__(self, "gamma", F(self.gamma))

    def check(self) -> None:
        if self.t < 2 or self.u < 2 or self.v < 1:
            raise ValueError("need t >= 2, u >= 2, v >= 1")
        if not self.lam < self.gamma * (self.u - self.v):
            raise ValueError("need lambda < gamma (u - v)")
        if self.s is not None and self.s < 1:
            raise ValueError("need s >= 1")

    @property
    def spread(self) -> Fraction:
        """gamma (u - v) - lambda, the common denominator of the member counts."""
        return self.gamma * (self.u - self.v) - self.lam

    @property
    def x_low(self) -> Fraction:
        return self.lam + self.gamma * self.v

    @property
    def x_high(self) -> Fraction:
        return self.gamma * self.u


@dataclass(frozen=True)
class MuffinSpec:
    m: int
    s: int

    def __post_init__(self):
        if self.m < 1 or self.s < 1:
            raise ValueError("need m >= 1 and s >= 1")

    @property
    def x(self) -> Fraction:
        return F(self.m, self.s)

    @property
    def n(self) -> int:
        return (2 * self.m) // self.s


class ParamClass(enum.Enum):
    U_WEIGHTED = "u-weighted"
    WEAKLY_U_WEIGHTED = "weakly u-weighted"
    STRONGLY_U_WEIGHTED = "strongly u-weighted"
    V_WEIGHTED = "v-weighted"
    V1 = "v=1"


def param_classes(t: int, u: int, v: int) -> set:
    out = set()
    if 2 <= v <= u:
        out.add(ParamClass.U_WEIGHTED)
        if u <= (v - 1) * t:
            out.add(ParamClass.WEAKLY_U_WEIGHTED)
        if v < u:
            out.add(ParamClass.STRONGLY_U_WEIGHTED)
    if 2 <= u < v:
        out.add(ParamClass.V_WEIGHTED)
    if v == 1:
        out.add(ParamClass.V1)
    return out


def validate_dap3(p: Dap3) -> Optional[str]:
    """Return None when ``p`` is a valid 3M-DAP, else the first violated requirement."""
    if p.t < 2:
        return "t >= 2"
    if p.u < 2:
        return "u >= 2"
    if p.v < 1:
        return "v >= 1"
    if p.s_t <= 0:
        return "s_t > 0"
    if p.s_u <= 0:
        return "s_u > 0"
    if p.s_v < 0:
        return "s_v >= 0"
    if p.v == 1 and p.n_v > (p.t - 2) * p.s_t:
        return "n_v <= (t-2) s_t when v = 1"
    if p.n_u + p.n_v != p.n_t:
        return "n_u + n_v = n_t"
    if not p.x_u / p.u < p.x_v / p.v:
        return "x_u/u < x_v/v"
    if p.s_u * p.x_u + p.s_v * p.x_v != p.s_t * p.x_t:
        return "s_u x_u + s_v x_v = s_t x_t"
    return None


def muffin_to_dap3(spec: MuffinSpec) -> Dap3:
    """Fully-constrained encoding: muffins are T rows, students with n+1 / n pieces are U / V rows."""
    m, s = spec.m, spec.s
    if not (m > s > 2) or (2 * m) % s == 0:
        raise ValueError("need m > s > 2 and 2m/s non-integral")
    n = spec.n
    x = spec.x
    return Dap3(2, n + 1, n, m, 2 * m - n * s, (n + 1) * s - 2 * m, F(1), x, x)


def _member(f: FamilyParams, x: Fraction, s: Fraction) -> tuple:
    d = f.spread
    s_v = (f.gamma * f.u - x) * s / d
    s_u = (x - f.lam - f.gamma * f.v) * s / d
    s_t = ((f.u - f.v) * x - f.lam * f.u) / d * s / f.t
    return s_t, s_u, s_v


def family_member_from_x(f: FamilyParams, x) -> Dap3:
    """The member of F(t,u,v,lambda,gamma) with x_u = x; minimal when ``f.s`` is None."""
    f.check()
    x = F(x)
    if not (f.x_low < x <= f.x_high):
        raise ValueError("x outside (lambda + gamma v, gamma u]")
    if f.s is None:
        scale = f.spread * x.denominator * f.gamma.denominator * f.lam.denominator * f.t
        counts = _member(f, x, scale)
        if any(c.denominator != 1 for c in counts):
            raise AssertionError("construction produced non-integral counts")
        g = math.gcd(*(int(c) for c in counts))
        s_t, s_u, s_v = (int(c) // g for c in counts)
    else:
        counts = _member(f, x, F(f.s))
        if any(c.denominator != 1 for c in counts):
            raise ValueError("non-integral row counts for this s")
        s_t, s_u, s_v = (int(c) for c in counts)
    p = Dap3(f.t, f.u, f.v, s_t, s_u, s_v, f.gamma * f.t, x, x - f.lam)
    err = validate_dap3(p)
    if err:
        raise ValueError(f"member violates {err}")
    return p


def family_members(f: FamilyParams) -> list:
    """All valid members for the fixed ``f.s``, in decreasing x."""
    f.check()
    if f.s is None:
        raise ValueError("family scan needs s")
    out = []
    for k in range(f.s, 0, -1):
        x = f.x_low + k * f.spread / f.s
        try:
            out.append(family_member_from_x(f, x))
        except ValueError:
            continue
    return out


@dataclass(frozen=True)
class ReductionStep:
    b: int
    shape: tuple
    child: Dap3


@dataclass(frozen=True)
class Solution:
    T: tuple
    U: tuple
    V: tuple
    value: Fraction
    trace: tuple = field(default=())

    @classmethod
    def build(cls, T, U, V, trace=()) -> "Solution":
        T = tuple(tuple(F(c) for c in r) for r in T)
        U = tuple(tuple(F(c) for c in r) for r in U)
        V = tuple(tuple(F(c) for c in r) for r in V)
        value = min(c for m in (T, U, V) for r in m for c in r)
        return cls(T, U, V, value, tuple(trace))

    def canonical(self) -> tuple:
        return tuple(tuple(sorted(tuple(sorted(r)) for r in m)) for m in (self.T, self.U, self.V))


@dataclass(frozen=True)
class EquivMap:
    """Increasing affine map y -> alpha y + beta carrying one problem onto another."""

    alpha: Fraction
    beta: Fraction

    def __call__(self, y) -> Fraction:
        return self.alpha * y + self.beta

    def inverse(self, z) -> Fraction:
        return (z - self.beta) / self.alpha

    def inverted(self) -> "EquivMap":
        return EquivMap(1 / self.alpha, -self.beta / self.alpha)

    def row_sum(self, total, k: int) -> Fraction:
        return self.alpha * total + k * self.beta


def standardize(p: Dap3) -> tuple:
    """Map a problem with u > v to the equivalent one with lambda = 0 and gamma = 1/2."""
    if p.u <= p.v:
        raise ValueError("standard form needs u > v")
    d = p.gamma * (p.u - p.v) - p.lam
    h = EquivMap(F(p.u - p.v) / (2 * d), -p.lam / (2 * d))
    q = Dap3(p.t, p.u, p.v, p.s_t, p.s_u, p.s_v,
             h.row_sum(p.x_t, p.t), h.row_sum(p.x_u, p.u), h.row_sum(p.x_v, p.v))
    return q, h


def apply_equiv(h: EquivMap, sol: Solution) -> Solution:
    def conv(m):
        return tuple(tuple(h(c) for c in r) for r in m)

    return Solution(conv(sol.T), conv(sol.U), conv(sol.V), h(sol.value), ())


_PROBLEM_KEYS = ("t", "u", "v", "s_t", "s_u", "s_v", "x_t", "x_u", "x_v")


def problem_to_json(p: Dap3) -> dict:
    d = {k: getattr(p, k) for k in _PROBLEM_KEYS}
    for k in ("x_t", "x_u", "x_v"):
        d[k] = rat_format(d[k])
    return d


def _as_int(v, key):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{key} must be an integer")
    return v


def _as_rat(v, key):
    if isinstance(v, bool):
        raise ValueError(f"{key} must be a rational string")
    if isinstance(v, int):
        return F(v)
    if isinstance(v, str):
        return rat_parse(v)
    raise ValueError(f"{key} must be a rational string")


def problem_from_json(d) -> Dap3:
    if not isinstance(d, dict) or set(d) != set(_PROBLEM_KEYS):
        raise ValueError(f"problem must have exactly the keys {', '.join(_PROBLEM_KEYS)}")
    ints = [_as_int(d[k], k) for k in _PROBLEM_KEYS[:6]]
    rats = [_as_rat(d[k], k) for k in _PROBLEM_KEYS[6:]]
    return Dap3(*ints, *rats)


def family_from_json(d) -> FamilyParams:
    if not isinstance(d, dict) or not {"t", "u", "v", "lambda", "gamma"} <= set(d) <= {"t", "u", "v", "lambda", "gamma", "s"}:
        raise ValueError("family must have keys t, u, v, lambda, gamma and optional s")
    s = d.get("s")
    return FamilyParams(_as_int(d["t"], "t"), _as_int(d["u"], "u"), _as_int(d["v"], "v"),
                        _as_rat(d["lambda"], "lambda"), _as_rat(d["gamma"], "gamma"),
                        None if s is None else _as_int(s, "s"))


def _matrix_json(m) -> list:
    return [[rat_format(c) for c in r] for r in m]


def solution_to_json(sol: Solution) -> dict:
    return {
        "value": rat_format(sol.value),
        "T": _matrix_json(sol.T),
        "U": _matrix_json(sol.U),
        "V": _matrix_json(sol.V),
        "trace": [{"b": st.b, "child": problem_to_json(st.child)} for st in sol.trace],
    }


def solution_from_json(d) -> Solution:
    if not isinstance(d, dict) or not {"value", "T", "U", "V"} <= set(d):
        raise ValueError("solution must have keys value, T, U, V")

    def mat(key):
        m = d[key]
        if not isinstance(m, list) or not all(isinstance(r, list) for r in m):
            raise ValueError(f"{key} must be a list of rows")
        return tuple(tuple(_as_rat(c, key) for c in r) for r in m)

    trace = tuple(ReductionStep(_as_int(s["b"], "b"), (), problem_from_json(s["child"]))
                  for s in d.get("trace", []))
    return Solution(mat("T"), mat("U"), mat("V"), _as_rat(d["value"], "value"), trace)
