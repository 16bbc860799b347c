"""
The optimal pair of two n-sided dice and its sum profile.

One die puts half its weight on each extreme side (the point-mass die),
the other weighs its extreme sides 2/(3n-2) and every interior side 3/(3n-2) (the plateau die).
Up to swapping the two, no other pair of nonnegative dice gets closer to uniform,
and the minimal squared distance is 1/(2(2n-1)(3n-2)).
"""
from dataclasses import dataclass
from fractions import Fraction

from cachetools import cached, LRUCache

from core import Die, ScalarMode, SumDistribution
from wards import require_sides


THEOREM_TAG = "thm1"


@dataclass(frozen=True)
class OptimalPair:
    n: int
    point_mass_die: Die
    plateau_die: Die
    d_min: Fraction

    @property
    def dice(self):
        """
        The pair in canonical order, point-mass die first.
        """
        return (self.point_mass_die, self.plateau_die)


def point_mass_die(n):
    n = require_sides(n)
    half = Fraction(1, 2)
    weights = [half] + [Fraction(0)] * (n - 2) + [half]
    return Die(tuple(weights), ScalarMode.RATIONAL, label="point-mass")


def plateau_die(n):
    n = require_sides(n)
    end = Fraction(2, 3 * n - 2)
    inner = Fraction(3, 3 * n - 2)
    weights = [end] + [inner] * (n - 2) + [end]
    return Die(tuple(weights), ScalarMode.RATIONAL, label="plateau")


def d_min(n):
    """
    Minimal distance to uniform for two n-sided dice.
    """
    n = require_sides(n)
    return Fraction(1, 2 * (2 * n - 1) * (3 * n - 2))


@cached(LRUCache(maxsize=256))
def optimal_pair(n) -> OptimalPair:
    """
    The optimal pair for `n` sides in exact rationals.
    At n = 2 both dice are fair coins.
    """
    n = require_sides(n)
    return OptimalPair(n, point_mass_die(n), plateau_die(n), d_min(n))


@cached(LRUCache(maxsize=256))
def optimal_sum_profile(n) -> SumDistribution:
    """
    Sum distribution of the optimal pair, written down directly:
    1/(3n-2) at j = 2 and j = 2n, 2/(3n-2) at the middle sum j = n + 1, and 3/(2(3n-2)) elsewhere.
    """
    n = require_sides(n)
    base = 3 * n - 2
    c = []
    for j in range(2, 2 * n + 1):
        if j in (2, 2 * n):
            c.append(Fraction(1, base))
        elif j == n + 1:
            c.append(Fraction(2, base))
        else:
            c.append(Fraction(3, 2 * base))
    return SumDistribution(2, n, tuple(c), ScalarMode.RATIONAL)
