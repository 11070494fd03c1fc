"""Exact rational scalars, partially filled matrices, piece multisets and an operation counter."""

from __future__ import annotations

import re
from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Rat",
    "RatMatrix",
    "PieceMultiset",
    "rat_parse",
    "rat_format",
    "multiset_of",
    "rowsums",
    "tick",
    "count_ops",
]

Rat = Fraction

_RAT_RE = re.compile(r"-?\d+(/\d+)?")


def rat_parse(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a canonical rational."""
    if not isinstance(text, str) or not _RAT_RE.fullmatch(text.strip()):
        raise ValueError(f"malformed rational: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def rat_format(r: Fraction | int) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


@dataclass
class RatMatrix:
    """Row-major matrix whose cells stay ``None`` until assigned."""

    rows: int
    cols: int
    cells: list = field(default=None)

    def __post_init__(self):
        if self.cells is None:
            self.cells = [[None] * self.cols for _ in range(self.rows)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[Fraction]]]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.cells[i][j] = Fraction(value)

    def completed(self) -> bool:
        return all(c is not None for row in self.cells for c in row)

    def row_tuples(self) -> tuple:
        if not self.completed():
            raise ValueError("matrix has empty cells")
        return tuple(tuple(r) for r in self.cells)


@dataclass(frozen=True)
class PieceMultiset:
    """Sorted (value, count) pairs with positive counts and strictly increasing values."""

    items: tuple = ()

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __len__(self) -> int:
        return sum(c for _, c in self.items)

    def __add__(self, other: "PieceMultiset") -> "PieceMultiset":
        c = Counter(dict(self.items))
        c.update(dict(other.items))
        return PieceMultiset(tuple(sorted(c.items())))

    def min(self) -> Fraction:
        return self.items[0][0]


def _rows_of(m) -> Iterable[Sequence]:
    if isinstance(m, RatMatrix):
        return m.cells
    return m


def multiset_of(ms: Iterable) -> PieceMultiset:
    """Multiset of every cell across the given matrices (RatMatrix or nested sequences)."""
    c: Counter = Counter()
    for m in ms:
        for row in _rows_of(m):
            for x in row:
                if x is None:
                    raise ValueError("matrix has empty cells")
                c[Fraction(x)] += 1
    return PieceMultiset(tuple(sorted(c.items())))


def rowsums(m) -> list:
    out = []
    for row in _rows_of(m):
        if any(x is None for x in row):
            raise ValueError("matrix has empty cells")
        out.append(sum(row, Fraction(0)))
    return out


_OPS: ContextVar[Optional[list]] = ContextVar("muffin_dap_ops", default=None)


def tick(n: int = 1) -> None:
    """Record ``n`` primitive cell operations when a counter is active."""
    box = _OPS.get()
    if box is not None:
        box[0] += n


@contextmanager
def count_ops():
    """Context manager yielding a one-element list holding the running operation count."""
    box = [0]
    token = _OPS.set(box)
    try:
        yield box
    finally:
        _OPS.reset(token)
