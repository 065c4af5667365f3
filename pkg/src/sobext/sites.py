"""Site normalization into the canonical frame and data augmentation.

Raw sites are arbitrary exact rationals on a line. ``normalize`` maps them
affinely so that min = -2^-11 and max = 2^-11, the frame in which the whole
decomposition operates. The augmented site -1 carries a value derived
affinely from the two extreme data values, with universal coefficients
``OUTER_A_PLUS`` and ``OUTER_A_MINUS``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

HALF_SPAN = Fraction(1, 2048)  # normalized max site, 2^-11

# Coefficients of the affine function through (-2^-11, f_min) and
# (2^-11, f_max), evaluated at x = -1.
OUTER_A_PLUS = Fraction(1, 2) - 1024   # weight of the value at +2^-11
OUTER_A_MINUS = Fraction(1, 2) + 1024  # weight of the value at -2^-11

AUX_SITE = Fraction(-1)


def parse_rational(v) -> Fraction:
    """Exact rational from int, Fraction, decimal/ratio string, or float.

    Floats are converted exactly (every float is a dyadic rational); decimal
    strings like "0.125" and ratio strings like "3/7" are parsed exactly.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a site coordinate")
    if isinstance(v, (int, str)):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)
    raise TypeError(f"cannot parse {type(v).__name__} as rational")


# Binary searches on parallel (numerator, denominator) tuples. All
# denominators are positive, so x[m] < p/q iff num[m]*q < p*den[m]; this
# avoids Fraction allocation in the decomposition hot loop.

def bisect_left_ratio(nums, dens, p: int, q: int) -> int:
    lo, hi = 0, len(nums)
    while lo < hi:
        mid = (lo + hi) // 2
        if nums[mid] * q < p * dens[mid]:
            lo = mid + 1
        else:
            hi = mid
    return lo


def bisect_right_ratio(nums, dens, p: int, q: int) -> int:
    lo, hi = 0, len(nums)
    while lo < hi:
        mid = (lo + hi) // 2
        if nums[mid] * q <= p * dens[mid]:
            lo = mid + 1
        else:
            hi = mid
    return lo


def count_open_ratio(nums, dens, p_lo: int, q_lo: int, p_hi: int, q_hi: int) -> int:
    """Number of entries strictly inside (p_lo/q_lo, p_hi/q_hi)."""
    lo = bisect_right_ratio(nums, dens, p_lo, q_lo)
    hi = bisect_left_ratio(nums, dens, p_hi, q_hi)
    return max(0, hi - lo)


@dataclass(frozen=True)
class SiteSet:
    """Normalized sites: sorted exact rationals with min/max = -/+ 2^-11.

    ``scale`` and ``translate`` record the affine map x -> scale*(x - translate)
    from user coordinates into the normalized frame.
    """

    xs: tuple[Fraction, ...]
    scale: Fraction
    translate: Fraction

    def __post_init__(self):
        if len(self.xs) < 2:
            raise ValueError("need at least 2 sites")
        if any(self.xs[m] >= self.xs[m + 1] for m in range(len(self.xs) - 1)):
            raise ValueError("sites must be strictly increasing")
        if self.xs[0] != -HALF_SPAN or self.xs[-1] != HALF_SPAN:
            raise ValueError("sites are not normalized to [-2^-11, 2^-11]")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def n(self) -> int:
        return len(self.xs)

    @cached_property
    def xs_plus(self) -> tuple[Fraction, ...]:
        """Sites of the augmented set, the auxiliary site -1 first."""
        return (AUX_SITE,) + self.xs

    @cached_property
    def _num_den(self):
        return (tuple(x.numerator for x in self.xs),
                tuple(x.denominator for x in self.xs))

    @cached_property
    def _num_den_plus(self):
        return (tuple(x.numerator for x in self.xs_plus),
                tuple(x.denominator for x in self.xs_plus))

    def to_user(self, x: Fraction) -> Fraction:
        return x / self.scale + self.translate

    def from_user(self, x: Fraction) -> Fraction:
        return self.scale * (x - self.translate)

    # range queries, exact
    def index_range_open(self, lo: Fraction, hi: Fraction, plus: bool = False) -> tuple[int, int]:
        """Indices [a, b) of sites strictly inside the open interval (lo, hi)."""
        nums, dens = self._num_den_plus if plus else self._num_den
        a = bisect_right_ratio(nums, dens, lo.numerator, lo.denominator)
        b = bisect_left_ratio(nums, dens, hi.numerator, hi.denominator)
        return a, max(a, b)

    def count_open(self, lo: Fraction, hi: Fraction, plus: bool = False) -> int:
        a, b = self.index_range_open(lo, hi, plus)
        return b - a

    def sites_in_open(self, lo: Fraction, hi: Fraction, plus: bool = False) -> tuple[Fraction, ...]:
        a, b = self.index_range_open(lo, hi, plus)
        src = self.xs_plus if plus else self.xs
        return src[a:b]

    def max_at_most(self, bound: Fraction, plus: bool = True) -> Optional[Fraction]:
        """Largest site <= bound, or None."""
        nums, dens = self._num_den_plus if plus else self._num_den
        idx = bisect_right_ratio(nums, dens, bound.numerator, bound.denominator) - 1
        if idx < 0:
            return None
        return (self.xs_plus if plus else self.xs)[idx]

    def index_of(self, x: Fraction, plus: bool = False) -> int:
        src = self.xs_plus if plus else self.xs
        nums, dens = self._num_den_plus if plus else self._num_den
        idx = bisect_left_ratio(nums, dens, x.numerator, x.denominator)
        if idx >= len(src) or src[idx] != x:
            raise KeyError(f"{x} is not a site")
        return idx


def normalize(raw_xs: Sequence) -> SiteSet:
    """Map raw sites affinely onto the canonical frame.

    The map is x -> s*(x - t) with s = 2^-10/(max - min) and t the midpoint,
    so the extreme sites land exactly on -/+ 2^-11. Idempotent on already
    normalized input.
    """
    xs = sorted({parse_rational(v) for v in raw_xs})
    if len(xs) < 2:
        raise ValueError("need at least 2 distinct sites")
    lo, hi = xs[0], xs[-1]
    scale = Fraction(1, 1024) / (hi - lo)
    translate = (lo + hi) / 2
    mapped = tuple(scale * (x - translate) for x in xs)
    return SiteSet(xs=mapped, scale=scale, translate=translate)


@dataclass(frozen=True)
class DataVector:
    """Values attached to the sites, in site order; optionally augmented.

    For augmented vectors the entry order matches ``SiteSet.xs_plus``, i.e.
    the derived value at the auxiliary site -1 comes first.
    """

    values: tuple
    augmented: bool = False

    def __post_init__(self):
        if len(self.values) < 2:
            raise ValueError("empty data vector")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, m):
        return self.values[m]


def as_data_vector(values, sites: SiteSet) -> DataVector:
    if isinstance(values, DataVector):
        if values.augmented:
            raise ValueError("expected unaugmented data")
        vals = values.values
    else:
        vals = tuple(values)
    if len(vals) != sites.n:
        raise ValueError(f"expected {sites.n} values, got {len(vals)}")
    return DataVector(vals)


def augment(f, sites: SiteSet) -> DataVector:
    """Extend data to the augmented site set.

    The value at -1 is the affine function through the two extreme data
    points evaluated there: OUTER_A_PLUS*f(max) + OUTER_A_MINUS*f(min).
    Exact when the values are Fractions.
    """
    f = as_data_vector(f, sites)
    v_aux = OUTER_A_PLUS * f.values[-1] + OUTER_A_MINUS * f.values[0]
    return DataVector((v_aux,) + f.values, augmented=True)
