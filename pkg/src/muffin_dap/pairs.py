"""Completion of maximal inseparable (T,V)-pairs and the shape of a b-pair."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import multiset_of, tick

__all__ = ["BPair", "complete_pair", "pair_shape", "pair_u_count"]

F = Fraction


@dataclass(frozen=True)
class BPair:
    b: int
    A: tuple
    B: tuple
    u_in: tuple

    def check(self, x_t, x_v) -> None:
        assert all(sum(r) == x_t for r in self.A)
        assert all(sum(r) == x_v for r in self.B)
        assert multiset_of([self.A]) == multiset_of([[self.u_in], self.B])


def pair_u_count(t: int, v: int, b: int) -> int:
    """Number of U-elements in a b-pair."""
    return ((v - 1) * b + 1) * t - b * v


def pair_shape(t: int, u: int, v: int, b: int) -> tuple:
    """(u', (a_t, a_v), v', (c_t, c_v)) with x_u' = a_t x_t - a_v x_v and x_v' = c_t x_t - c_v x_v."""
    if b < 1:
        raise ValueError("b >= 1 required")
    u_p = pair_u_count(t, v, b)
    v_p = pair_u_count(t, v, b - 1)
    return u_p, ((v - 1) * b + 1, b), v_p, ((v - 1) * (b - 1) + 1, b - 1)


def complete_pair(b: int, x_t, x_v, t: int, v: int, u_in: Sequence) -> BPair:
    """Lay ``u_in`` into the rows of A and solve for every remaining element of A and B."""
    x_t, x_v = F(x_t), F(x_v)
    u_in = tuple(F(c) for c in u_in)
    if b < 0:
        raise ValueError("b >= 0 required")
    if len(u_in) != pair_u_count(t, v, b):
        raise ValueError(f"expected {pair_u_count(t, v, b)} U-elements, got {len(u_in)}")
    if b == 0:
        tick(t)
        return BPair(0, (u_in,), (), u_in)
    if v == 1:
        if b > t - 2:
            raise ValueError("v = 1 needs b <= t - 2")
        row = u_in + (x_v,) * b
        tick(t + b)
        return BPair(b, (row,), tuple((x_v,) for _ in range(b)), u_in)
    it = iter(u_in)
    if b == 1:
        A, w = [], []
        for _ in range(v):
            us = [next(it) for _ in range(t - 1)]
            w.append(x_t - sum(us))
            A.append(tuple(us) + (w[-1],))
        tick(2 * len(A) * t)
        return BPair(1, tuple(A), (tuple(w),), u_in)
    n_w = b * (v - 2) + 2
    A_w, w = [], []
    for _ in range(n_w):
        us = [next(it) for _ in range(t - 1)]
        w.append(x_t - sum(us))
        A_w.append(tuple(us) + (w[-1],))
    yz_us = [[next(it) for _ in range(t - 2)] for _ in range(b - 1)]
    B, A_yz = [], []
    head = w[: v - 1]
    y = x_v - sum(head)
    B_row = head
    pos = v - 1
    for i in range(b - 1):
        B.append(tuple(B_row) + (y,))
        z = x_t - y - sum(yz_us[i])
        A_yz.append(tuple(yz_us[i]) + (y, z))
        if i < b - 2:
            mid = w[pos: pos + v - 2]
            pos += v - 2
            y = x_v - z - sum(mid)
            B_row = [z] + mid
        else:
            B.append((z,) + tuple(w[pos:]))
    A = tuple(A_w + A_yz)
    tick(2 * len(A) * t + (b - 1) * v)
    return BPair(b, A, tuple(B), u_in)
