"""
Dice with real, possibly negative, weights whose sum is exactly uniform.

For odd n, splitting the quadratic factors of T into m groups of (n-1)/2 gives m polynomials
of degree n-1 whose product is T. Shifting each by one power of x (side 1 is x^1) and scaling its
coefficients to sum to 1 turns each into a die, and any split works.
For even n no weighting exists, and the verdict says so.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Tuple

from core import Die, InvalidInputError, ScalarMode, convolve
from meta import log
from wards import require_sides, require_dice_count

from .factors import t_polynomial_factors, expand_factors


IMPOSSIBLE_REASON = "n even (Theorem 2)"


class Outcome(str, Enum):
    DICE = 'dice'
    IMPOSSIBLE = 'impossible'

    def __repr__(self):
        return '<%s.%s>' % (self.__class__.__name__, self.name)


@dataclass(frozen=True)
class ConstructionResult:
    outcome: Outcome
    n: int
    m: int
    dice: Tuple[Die, ...] = ()
    partition: Tuple[Tuple[int, ...], ...] = ()
    max_uniform_error: Optional[float] = None
    reason: Optional[str] = None

    @property
    def possible(self):
        return self.outcome is Outcome.DICE

    @property
    def max_abs_weight(self):
        """
        Largest absolute weight over all dice, for comparing partitions.
        """
        if not self.dice:
            return None
        return max(abs(w) for die in self.dice for w in die.weights)


def default_partition(n, m):
    """
    Round-robin assignment, root index k goes to die (k - 1) mod m.
    """
    count = m * (n - 1) // 2
    return tuple(
        tuple(k for k in range(1, count + 1) if (k - 1) % m == die)
        for die in range(m)
    )


def check_partition(partition, n, m):
    """
    Validate an explicit partition: `m` groups of (n-1)/2 root indices, using each of 1..m(n-1)/2 once.

    Returns: Tuple[Tuple[int, ...], ...]
    """
    try:
        groups = tuple(tuple(int(k) for k in group) for group in partition)
    except (TypeError, ValueError):
        raise InvalidInputError("A partition is a list of lists of root indices.") from None
    size = (n - 1) // 2
    count = m * size
    if len(groups) != m:
        raise InvalidInputError("The partition needs {} groups, one per die, got {}.".format(m, len(groups)))
    if any(len(group) != size for group in groups):
        raise InvalidInputError("Each group needs exactly {} root indices.".format(size))
    used = sorted(k for group in groups for k in group)
    if used != list(range(1, count + 1)):
        raise InvalidInputError("The groups must use each root index 1..{} exactly once.".format(count))
    return groups


def iter_partitions(n, m):
    """
    Every valid partition for odd `n`, as ordered groups (die 1 first).
    """
    size = (n - 1) // 2
    count = m * size

    def _split(remaining, groups_left):
        if groups_left == 0:
            yield ()
            return
        for group in combinations(remaining, size):
            rest = tuple(k for k in remaining if k not in group)
            for tail in _split(rest, groups_left - 1):
                yield (group,) + tail

    yield from _split(tuple(range(1, count + 1)), m)


def verify_uniform(dice) -> float:
    """
    Largest deviation of the sum distribution from uniform, computed in float mode.
    """
    dist = convolve([die.as_float() for die in dice])
    u = dist.uniform_value
    return max(abs(value - u) for value in dist.c)


def construct_uniform_dice(n, m, partition=None) -> ConstructionResult:
    """
    Build `m` n-sided dice with a uniform sum, or the impossibility verdict for even `n`.

    Parameters
    ----------
    n: int
        Sides per die.
    m: int
        Number of dice, at least 2.
    partition: Optional[Sequence[Sequence[int]]]
        Root indices per die, round-robin if not given.

    Returns: ConstructionResult
    """
    n = require_sides(n)
    m = require_dice_count(m)
    if n % 2 == 0:
        log("No uniform weighting exists for even n = {}.".format(n), context="NEG_UNIFORM", level=logging.DEBUG)
        return ConstructionResult(Outcome.IMPOSSIBLE, n, m, reason=IMPOSSIBLE_REASON)

    groups = check_partition(partition, n, m) if partition is not None else default_partition(n, m)
    factors = {factor.k: factor for factor in t_polynomial_factors(n, m)}

    dice = []
    for group in groups:
        coefficients = expand_factors([factors[k] for k in group])
        total = sum(coefficients)
        dice.append(Die(tuple(c / total for c in coefficients), ScalarMode.FLOAT, allow_negative=True))
    dice = tuple(dice)

    error = verify_uniform(dice)
    log("Built {} uniform {}-sided dice, max error {:.3g}.".format(m, n, error), context="NEG_UNIFORM")
    return ConstructionResult(Outcome.DICE, n, m, dice, groups, error)
