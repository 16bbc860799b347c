from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from constants import FLOAT_SUM_TOL

from .errors import InvalidInputError
from .scalar import ScalarMode


@dataclass(frozen=True)
class DieReport:
    """
    Result of checking a die against its constraints.
    """
    valid: bool
    total: object
    sum_deviation: object
    negative_sides: Tuple[int, ...] = ()

    @property
    def problems(self):
        problems = []
        if self.sum_deviation:
            problems.append("weights sum to {} instead of 1".format(self.total))
        if self.negative_sides:
            problems.append("negative weight on side(s) {}".format(
                ', '.join(str(side) for side in self.negative_sides)
            ))
        return problems


@dataclass(frozen=True)
class Die:
    """
    An n-sided weighted die.

    `weights[i - 1]` is the weight of side `i`.
    Weights are all in one scalar `mode`; with `allow_negative` they may be any reals summing to 1.
    Construction does not enforce the constraints, use `validate` or `validate_die`.
    """
    weights: Tuple[object, ...]
    mode: ScalarMode = ScalarMode.RATIONAL
    allow_negative: bool = False
    label: str = field(default=None, compare=False)

    def __post_init__(self):
        mode = ScalarMode.parse(self.mode)
        object.__setattr__(self, 'mode', mode)
        object.__setattr__(self, 'weights', tuple(mode.coerce(w) for w in self.weights))
        if len(self.weights) < 2:
            raise InvalidInputError("A die needs at least two sides, got {}.".format(len(self.weights)))

    @classmethod
    def from_values(cls, values, mode=None, allow_negative=False, label=None):
        """
        Build a die, inferring the scalar mode from the values if not given.
        """
        values = list(values)
        mode = ScalarMode.parse(mode) if mode is not None else ScalarMode.of(*values)
        return cls(tuple(values), mode, allow_negative, label)

    @property
    def n(self):
        return len(self.weights)

    def weight(self, side):
        """
        Weight of `side`, counted from 1.
        """
        if not 1 <= side <= self.n:
            raise InvalidInputError("Side {} is not on a {}-sided die.".format(side, self.n))
        return self.weights[side - 1]

    def validate(self):
        return validate_die(self)

    def as_float(self):
        if self.mode is ScalarMode.FLOAT:
            return self
        return Die(tuple(float(w) for w in self.weights), ScalarMode.FLOAT, self.allow_negative, self.label)

    def as_rational(self):
        """
        Exact rational copy, each float converted to the rational it represents exactly.
        """
        if self.mode is ScalarMode.RATIONAL:
            return self
        return Die(tuple(Fraction(w) for w in self.weights), ScalarMode.RATIONAL, self.allow_negative, self.label)

    def __str__(self):
        return "({})".format(', '.join(str(w) for w in self.weights))


def validate_die(die: Die) -> DieReport:
    """
    Report how far the die's weights are from summing to 1,
    and which sides carry a negative weight when negative weights are not allowed.
    The sum check is exact in rational mode and within `FLOAT_SUM_TOL` in float mode.
    """
    total = sum(die.weights, die.mode.zero)
    deviation = total - die.mode.one
    if die.mode is ScalarMode.FLOAT and abs(deviation) <= FLOAT_SUM_TOL:
        deviation = 0.0
    negatives = () if die.allow_negative else tuple(
        side for side, w in enumerate(die.weights, start=1) if w < 0
    )
    return DieReport(
        valid=(not deviation and not negatives),
        total=total,
        sum_deviation=deviation,
        negative_sides=negatives
    )
