"""
Argument guards shared by the theorem-specific operations.
"""
from numbers import Integral

from core.errors import InvalidInputError


def require_int(name, value, minimum=None):
    """
    Check that `value` is an integer (not a boolean) of at least `minimum`, and return it as an `int`.
    """
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise InvalidInputError("`{}` must be an integer, got `{!r}`.".format(name, value))
    if minimum is not None and value < minimum:
        raise InvalidInputError("`{}` must be at least {}, got {}.".format(name, minimum, value))
    return int(value)


def require_sides(n, minimum=2):
    return require_int('n', n, minimum)


def require_dice_count(m, minimum=2):
    return require_int('m', m, minimum)
