from dataclasses import dataclass
from typing import Sequence, Tuple

from .convolution import convolve_all
from .die import Die
from .errors import InvalidInputError
from .scalar import ScalarMode


@dataclass(frozen=True)
class SumDistribution:
    """
    Distribution of the sum of `m` dice with `n` sides each.

    `c[j - m]` is the probability (or real weight) that the sum equals `j`, for `j = m, ..., m*n`.
    The 0-based storage is internal, `at`, `items` and `sums` always speak in sum values.
    """
    m: int
    n: int
    c: Tuple[object, ...]
    mode: ScalarMode = ScalarMode.RATIONAL

    def __post_init__(self):
        mode = ScalarMode.parse(self.mode)
        object.__setattr__(self, 'mode', mode)
        object.__setattr__(self, 'c', tuple(mode.coerce(x) for x in self.c))
        if self.m < 1 or self.n < 1:
            raise InvalidInputError("A sum distribution needs m >= 1 and n >= 1.")
        if len(self.c) != self.support_size:
            raise InvalidInputError(
                "Expected {} entries for m={}, n={}, got {}.".format(self.support_size, self.m, self.n, len(self.c))
            )

    @property
    def support_size(self):
        return self.m * (self.n - 1) + 1

    @property
    def uniform_value(self):
        return self.mode.ratio(1, self.support_size)

    @property
    def sums(self):
        return range(self.m, self.m * self.n + 1)

    def at(self, j):
        if not self.m <= j <= self.m * self.n:
            raise InvalidInputError("Sum {} is impossible with {} {}-sided dice.".format(j, self.m, self.n))
        return self.c[j - self.m]

    def items(self):
        return zip(self.sums, self.c)

    def total(self):
        return sum(self.c, self.mode.zero)


def convolve(dice: Sequence[Die]) -> SumDistribution:
    """
    Distribution of the sum of the given dice.

    All dice must share their side count and scalar mode.
    The result is exact in rational mode, including dice with negative weights.
    """
    dice = list(dice)
    if not dice:
        raise InvalidInputError("Cannot convolve an empty list of dice.")
    n = dice[0].n
    mode = dice[0].mode
    for die in dice[1:]:
        if die.n != n:
            raise InvalidInputError("All dice must have the same number of sides ({} != {}).".format(die.n, n))
        if die.mode is not mode:
            raise InvalidInputError("All dice must share a scalar mode ({} != {}).".format(die.mode.value, mode.value))

    c = convolve_all([die.weights for die in dice], exact=mode.exact)
    return SumDistribution(len(dice), n, c, mode)


def sum_of_squares(dist: SumDistribution):
    """
    Sum over all sums j of c_j squared.
    """
    return sum((x * x for x in dist.c), dist.mode.zero)


def distance_to_uniform(dist: SumDistribution):
    """
    Squared L2 distance D from the sum distribution to the uniform distribution on its support.
    """
    u = dist.uniform_value
    return sum(((x - u) * (x - u) for x in dist.c), dist.mode.zero)
