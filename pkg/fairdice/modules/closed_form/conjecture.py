"""
The conjectured optimal family for m > 2 dice, and the identical-dice answer it improves upon.
"""
from fractions import Fraction

from core import Die, ScalarMode, UnsupportedInputError, convolve, distance_to_uniform
from wards import require_sides, require_dice_count


CONJECTURE_STATUS = "conjecture"

# Best identical symmetric six-sided die reported by an earlier numerical search
_IDENTICAL_SIX_SIDED = (0.243883, 0.137480, 0.118637, 0.118637, 0.137480, 0.243883)


def conjectured_m_dice(n, m):
    """
    Conjectured optimal weighting of `m` n-sided dice. Not proven for m > 2.

    The first die weighs its extreme sides m/K and its interior sides (2m-1)/K, with K = (n-2)(2m-1) + 2m.
    The other m - 1 dice are point-mass dice.
    For m = 2 this is the optimal pair with the plateau die first.

    Returns: Tuple[Die, ...]
    """
    n = require_sides(n)
    m = require_dice_count(m)
    denominator = (n - 2) * (2 * m - 1) + 2 * m
    end = Fraction(m, denominator)
    inner = Fraction(2 * m - 1, denominator)
    first = Die((end,) + (inner,) * (n - 2) + (end,), ScalarMode.RATIONAL, label="plateau")

    half = Fraction(1, 2)
    point_mass = Die((half,) + (Fraction(0),) * (n - 2) + (half,), ScalarMode.RATIONAL, label="point-mass")
    return (first,) + (point_mass,) * (m - 1)


def conjectured_d(n, m):
    """
    Exact distance to uniform of the conjectured family.
    """
    return distance_to_uniform(convolve(conjectured_m_dice(n, m)))


def gasarch_kruskal_die(n=6):
    """
    The symmetric die found by searching over pairs of identical dice, six sides only.
    The printed decimals are renormalised to sum to 1 in float mode.
    """
    if n != 6:
        raise UnsupportedInputError("The identical-dice weights are only known for n = 6, got n = {}.".format(n))
    total = sum(_IDENTICAL_SIX_SIDED)
    return Die(tuple(w / total for w in _IDENTICAL_SIX_SIDED), ScalarMode.FLOAT, label="identical")
