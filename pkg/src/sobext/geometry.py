"""Exact dyadic cells on the root square [-1, 1]^2 and their open dilations.

Dyadic squares and intervals are closed sets; dilations of them are open.
All coordinates and predicates use rational arithmetic, so boundary
membership is decided exactly and never depends on floating-point rounding.

The undivided root cell ([-1, 1] resp. [-1, 1]^2) does not fit the usual
``[i/2^k, (i+1)/2^k]`` indexing and is stored at the sentinel level ``-1``
with index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ROOT_LEVEL = -1

# Half-width of the closed frame square around the normalized data; used by
# the relevance test and as the support bound of the outer cutoff.
Q_INNER_HALF = Fraction(1, 1024)

RationalLike = Union[int, str, Fraction]


def _exact(c: RationalLike) -> Fraction:
    # floats like 1.1 are binary approximations; insist on exact input
    if isinstance(c, float):
        raise TypeError("dilation factor must be exact: int, str or Fraction")
    return Fraction(c)


@dataclass(frozen=True)
class RationalPoint:
    """A point of the plane with exact rational coordinates."""

    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class DyadicInterval:
    """Closed dyadic interval [i/2^k, (i+1)/2^k]; level -1 is the root [-1, 1]."""

    k: int
    i: int

    def __post_init__(self):
        if self.k == ROOT_LEVEL:
            if self.i != 0:
                raise ValueError("root interval must have index 0")
            return
        if self.k < 0:
            raise ValueError(f"bad interval level {self.k}")
        if not -(1 << self.k) <= self.i <= (1 << self.k) - 1:
            raise ValueError(f"index {self.i} outside level-{self.k} range")

    @property
    def is_root(self) -> bool:
        return self.k == ROOT_LEVEL

    @property
    def length(self) -> Fraction:
        return Fraction(2) if self.is_root else Fraction(1, 1 << self.k)

    @property
    def a(self) -> Fraction:
        return Fraction(-1) if self.is_root else Fraction(self.i, 1 << self.k)

    @property
    def b(self) -> Fraction:
        return Fraction(1) if self.is_root else Fraction(self.i + 1, 1 << self.k)

    @property
    def center(self) -> Fraction:
        return Fraction(0) if self.is_root else Fraction(2 * self.i + 1, 1 << (self.k + 1))

    def contains(self, x) -> bool:
        return self.a <= x <= self.b

    def parent(self) -> "DyadicInterval":
        if self.is_root:
            raise ValueError("root interval has no parent")
        if self.k == 0:
            return ROOT_INTERVAL
        return DyadicInterval(self.k - 1, self.i // 2)

    def children(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        if self.is_root:
            return (DyadicInterval(0, -1), DyadicInterval(0, 0))
        return (DyadicInterval(self.k + 1, 2 * self.i),
                DyadicInterval(self.k + 1, 2 * self.i + 1))

    def sort_key(self):
        return (self.k, self.i)

    def to_json(self) -> dict:
        if self.is_root:
            return {"root": True}
        return {"k": self.k, "i": self.i}


@dataclass(frozen=True)
class DyadicSquare:
    """Closed dyadic square [i/2^k, (i+1)/2^k] x [j/2^k, (j+1)/2^k].

    Level -1 with indices (0, 0) is the root [-1, 1]^2.
    """

    k: int
    i: int
    j: int

    def __post_init__(self):
        if self.k == ROOT_LEVEL:
            if self.i != 0 or self.j != 0:
                raise ValueError("root square must have indices (0, 0)")
            return
        if self.k < 0:
            raise ValueError(f"bad square level {self.k}")
        lim = 1 << self.k
        if not (-lim <= self.i <= lim - 1 and -lim <= self.j <= lim - 1):
            raise ValueError(f"indices ({self.i}, {self.j}) outside level-{self.k} range")

    @property
    def is_root(self) -> bool:
        return self.k == ROOT_LEVEL

    @property
    def side(self) -> Fraction:
        return Fraction(2) if self.is_root else Fraction(1, 1 << self.k)

    @property
    def area(self) -> Fraction:
        return self.side * self.side

    @property
    def x0(self) -> Fraction:
        return Fraction(-1) if self.is_root else Fraction(self.i, 1 << self.k)

    @property
    def x1(self) -> Fraction:
        return Fraction(1) if self.is_root else Fraction(self.i + 1, 1 << self.k)

    @property
    def y0(self) -> Fraction:
        return Fraction(-1) if self.is_root else Fraction(self.j, 1 << self.k)

    @property
    def y1(self) -> Fraction:
        return Fraction(1) if self.is_root else Fraction(self.j + 1, 1 << self.k)

    @property
    def center(self) -> RationalPoint:
        if self.is_root:
            return RationalPoint(Fraction(0), Fraction(0))
        den = 1 << (self.k + 1)
        return RationalPoint(Fraction(2 * self.i + 1, den), Fraction(2 * self.j + 1, den))

    def contains(self, x, y) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def parent(self) -> "DyadicSquare":
        if self.is_root:
            raise ValueError("root square has no parent")
        if self.k == 0:
            return ROOT_SQUARE
        return DyadicSquare(self.k - 1, self.i // 2, self.j // 2)

    def children(self) -> tuple["DyadicSquare", ...]:
        if self.is_root:
            return tuple(DyadicSquare(0, i, j) for i in (-1, 0) for j in (-1, 0))
        k, i, j = self.k + 1, 2 * self.i, 2 * self.j
        return tuple(DyadicSquare(k, i + di, j + dj) for di in (0, 1) for dj in (0, 1))

    def shadow(self) -> DyadicInterval:
        """Projection onto the x-axis; same level and x-index."""
        if self.is_root:
            return ROOT_INTERVAL
        return DyadicInterval(self.k, self.i)

    def sort_key(self):
        return (self.k, self.i, self.j)

    def to_json(self) -> dict:
        if self.is_root:
            return {"root": True}
        return {"k": self.k, "i": self.i, "j": self.j}


ROOT_INTERVAL = DyadicInterval(ROOT_LEVEL, 0)
ROOT_SQUARE = DyadicSquare(ROOT_LEVEL, 0, 0)


@dataclass(frozen=True)
class OpenInterval:
    """Open interval (lo, hi) with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("open interval needs lo < hi")

    @property
    def center(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def intersects(self, other: "OpenInterval") -> bool:
        return self.lo < other.hi and other.lo < self.hi

    def meets_closed(self, a, b) -> bool:
        """Nonempty intersection with the closed interval [a, b]."""
        return self.lo < b and a < self.hi


@dataclass(frozen=True)
class OpenBox:
    """Open axis-aligned rectangle with exact rational bounds."""

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self):
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError("open box needs positive extents")

    @property
    def center(self) -> RationalPoint:
        return RationalPoint((self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2)

    @property
    def half_widths(self) -> tuple[Fraction, Fraction]:
        return ((self.x1 - self.x0) / 2, (self.y1 - self.y0) / 2)

    def contains(self, x, y) -> bool:
        return self.x0 < x < self.x1 and self.y0 < y < self.y1

    def contains_point(self, p: RationalPoint) -> bool:
        return self.contains(p.x, p.y)

    def intersects(self, other: "OpenBox") -> bool:
        return (self.x0 < other.x1 and other.x0 < self.x1
                and self.y0 < other.y1 and other.y0 < self.y1)

    def meets_closed(self, x0, x1, y0, y1) -> bool:
        """Nonempty intersection with the closed box [x0,x1] x [y0,y1]."""
        return self.x0 < x1 and x0 < self.x1 and self.y0 < y1 and y0 < self.y1

    def x_range(self) -> OpenInterval:
        return OpenInterval(self.x0, self.x1)

    def meets_axis(self) -> bool:
        return self.y0 < 0 < self.y1


def dilate(cell, c: RationalLike):
    """Open dilation of a dyadic cell about its center.

    For intervals the factor must satisfy c > 1; for squares c > 1/4 and
    c != 1. Returns an OpenInterval or OpenBox with exact bounds.
    """
    c = _exact(c)
    if isinstance(cell, DyadicInterval):
        if c <= 1:
            raise ValueError("interval dilation requires c > 1")
        half = c * cell.length / 2
        m = cell.center
        return OpenInterval(m - half, m + half)
    if isinstance(cell, DyadicSquare):
        if c <= Fraction(1, 4) or c == 1:
            raise ValueError("square dilation requires c > 1/4, c != 1")
        half = c * cell.side / 2
        m = cell.center
        return OpenBox(m.x - half, m.x + half, m.y - half, m.y + half)
    raise TypeError(f"cannot dilate {type(cell).__name__}")


def touches(q: DyadicSquare, q2: DyadicSquare) -> bool:
    """Whether two closed dyadic squares intersect (edge, corner or overlap)."""
    return (q.x0 <= q2.x1 and q2.x0 <= q.x1
            and q.y0 <= q2.y1 and q2.y0 <= q.y1)


def square_id(q: DyadicSquare) -> str:
    return "root" if q.is_root else f"{q.k}:{q.i}:{q.j}"


def interval_id(iv: DyadicInterval) -> str:
    return "root" if iv.is_root else f"{iv.k}:{iv.i}"
