"""
Scalar modes.

Every computation runs in exactly one mode: exact rationals (`fractions.Fraction`)
or IEEE-754 doubles. Values are never promoted between modes implicitly;
`ScalarMode.coerce` refuses cross-mode input and conversions are explicit.
"""
from enum import Enum
from fractions import Fraction
from numbers import Integral

from .errors import InvalidInputError


class ScalarMode(str, Enum):
    RATIONAL = 'rational'
    FLOAT = 'float'

    def __repr__(self):
        return '<%s.%s>' % (self.__class__.__name__, self.name)

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise InvalidInputError(
                "Unknown scalar mode `{}`, expected `rational` or `float`.".format(value)
            ) from None

    @classmethod
    def of(cls, *values):
        """
        Infer the mode of a collection of values.
        Integers are compatible with both modes; an all-integer collection is rational.
        """
        modes = set()
        for value in values:
            if isinstance(value, bool):
                raise InvalidInputError("Booleans are not scalars.")
            if isinstance(value, Integral):
                continue
            if isinstance(value, Fraction):
                modes.add(cls.RATIONAL)
            elif isinstance(value, float):
                modes.add(cls.FLOAT)
            else:
                raise InvalidInputError("Unsupported scalar type `{}`.".format(type(value).__name__))
        if len(modes) > 1:
            raise InvalidInputError("Rational and float values cannot be mixed in one computation.")
        return modes.pop() if modes else cls.RATIONAL

    @property
    def exact(self):
        return self is ScalarMode.RATIONAL

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def ratio(self, num, den):
        """
        The value num/den in this mode.
        """
        if self.exact:
            return Fraction(num, den)
        return num / den

    def coerce(self, value):
        """
        Convert a single value into this mode.

        Rational mode accepts integers, Fractions and "num/den" strings.
        Float mode accepts integers, floats and decimal strings.
        Cross-mode values are rejected.
        """
        if isinstance(value, bool):
            raise InvalidInputError("Booleans are not scalars.")
        if self.exact:
            if isinstance(value, (Integral, Fraction)):
                return Fraction(value)
            if isinstance(value, str):
                try:
                    return Fraction(value.strip())
                except (ValueError, ZeroDivisionError):
                    raise InvalidInputError("Couldn't parse rational `{}`.".format(value)) from None
            raise InvalidInputError(
                "Refusing to promote {} `{}` into rational mode.".format(type(value).__name__, value)
            )
        else:
            if isinstance(value, Fraction):
                raise InvalidInputError(
                    "Refusing to round rational `{}` into float mode.".format(value)
                )
            if isinstance(value, (Integral, float)):
                return float(value)
            if isinstance(value, str):
                try:
                    return float(value.strip())
                except ValueError:
                    raise InvalidInputError("Couldn't parse float `{}`.".format(value)) from None
            raise InvalidInputError("Unsupported scalar type `{}`.".format(type(value).__name__))


def format_scalar(value, digits=12):
    """
    Human-readable form of a scalar.
    Rationals are shown exactly and to `digits` significant digits, floats as decimals.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{} ≈ {:.{}g}".format(value, float(value), digits)
    return "{:.{}g}".format(value, digits)
