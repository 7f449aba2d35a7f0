"""Certified enclosures for irrational quantities built from exact rationals.

All constructions in this package use `fractions.Fraction`; square roots are
never materialized. When a length or a ratio involving square roots must be
reported, it is enclosed in a rational interval [lo, hi] whose width is driven
below any requested relative tolerance by raising the working precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Interval:
    """A closed rational interval certified to contain the true real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        assert self.lo <= self.hi

    def rel_width(self) -> Fraction:
        if self.lo <= 0:
            return Fraction(10**18)
        return self.hi / self.lo - 1

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


def isqrt_scaled(num: int, den: int, bits: int) -> tuple[int, int]:
    """Integer enclosure of sqrt(num/den) at scale 2**bits.

    Returns (lo, hi) with lo/2**bits <= sqrt(num/den) <= hi/2**bits and
    hi - lo <= 1.
    """
    assert num >= 0 and den > 0
    scaled = (num << (2 * bits)) // den
    s = math.isqrt(scaled)
    if s * s * den == (num << (2 * bits)):
        return s, s
    return s, s + 1


def sqrt_interval(q: Fraction, bits: int = 64) -> Interval:
    """Certified enclosure of sqrt(q) for a nonnegative rational q."""
    assert q >= 0
    lo, hi = isqrt_scaled(q.numerator, q.denominator, bits)
    scale = Fraction(1, 1 << bits)
    return Interval(lo * scale, hi * scale)


def sqrt_lower_int(num: int, den: int, bits: int) -> int:
    """Largest s with (s/2**bits)**2 <= num/den."""
    return math.isqrt((num << (2 * bits)) // den)


def sqrt_upper_int(num: int, den: int, bits: int) -> int:
    """Smallest practical s with (s/2**bits)**2 >= num/den (lower bound + 1 unless exact)."""
    lo, hi = isqrt_scaled(num, den, bits)
    return hi
