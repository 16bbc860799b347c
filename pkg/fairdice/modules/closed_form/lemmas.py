"""
Checkable inequalities behind the optimality of the pair.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from cachetools import cached, LRUCache

from core import InvalidInputError, ScalarMode, SumDistribution
from wards import require_int


def amgm_residual(dist: SumDistribution) -> float:
    """
    c_{n+1} - 2 sqrt(c_2 c_{2n}) for a two-dice distribution.

    Nonnegative (up to rounding) whenever the dice are nonnegative, with equality
    exactly for the optimal pair. The square root makes the result a float in both modes.
    """
    if dist.m != 2:
        raise InvalidInputError("The AM-GM residual is defined for two dice, got m = {}.".format(dist.m))
    n = dist.n
    product = dist.at(2) * dist.at(2 * n)
    if product < 0:
        raise InvalidInputError("c_2 * c_{} is negative; the residual needs nonnegative dice.".format(2 * n))
    return float(dist.at(n + 1)) - 2 * math.sqrt(float(product))


def lemma2_decomposition(x, y, z):
    """
    Both sides of the identity
        8(x^2 + y^2 + z^2) - 3(x + y + z)^2 = 2(z^2 - 4xy) + (z - x - y)^2 + (z - 2x)^2 + (z - 2y)^2,
    which holds for all reals. With z^2 >= 4xy every term on the right is nonnegative.

    Returns: Tuple[scalar, Tuple[scalar, scalar, scalar, scalar]]
        The left hand side and the four right hand terms, in the mode of the inputs.
    """
    mode = ScalarMode.of(x, y, z)
    x, y, z = (mode.coerce(v) for v in (x, y, z))
    lhs = 8 * (x * x + y * y + z * z) - 3 * (x + y + z) ** 2
    terms = (
        2 * (z * z - 4 * x * y),
        (z - x - y) ** 2,
        (z - 2 * x) ** 2,
        (z - 2 * y) ** 2,
    )
    return lhs, terms


@dataclass(frozen=True)
class LowerBoundCurve:
    """
    The parabola f(s) = (3/8) s^2 + (1 - s)^2 / (2n - 4) bounding the sum of squares of a two-dice profile
    from below, where s is the mass on the three special sums 2, n + 1 and 2n.
    """
    n: int
    vertex_s: Fraction
    vertex_value: Fraction

    def __call__(self, s):
        mode = ScalarMode.of(s)
        s = mode.coerce(s)
        return mode.ratio(3, 8) * s * s + mode.ratio(1, 2 * self.n - 4) * (1 - s) * (1 - s)


@cached(LRUCache(maxsize=256))
def lower_bound_curve(n) -> LowerBoundCurve:
    """
    The parabola for `n` sides with its vertex s* = 4/(3n-2), f(s*) = 3/(2(3n-2)).
    Undefined for n = 2, where no sums lie outside the three special ones.
    """
    n = require_int('n', n)
    if n < 3:
        raise InvalidInputError(
            "The lower bound parabola needs n >= 3, got n = {} "
            "(at n = 2 every sum is special and the bound degenerates).".format(n)
        )
    return LowerBoundCurve(n, Fraction(4, 3 * n - 2), Fraction(3, 2 * (3 * n - 2)))


def lower_bound_f(n, s):
    """
    Evaluate the lower bound parabola for `n` sides at `s`, exactly for rational `s`.
    """
    return lower_bound_curve(n)(s)
