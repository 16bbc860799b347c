"""
JSON and CSV representations of scalars, dice and sum distributions.

Rationals are written as `{"num": "<decimal>", "den": "<decimal>"}` so that
arbitrary precision survives any JSON reader; floats are written as numbers.
"""
from fractions import Fraction
from numbers import Integral

from core.errors import DiceFileError
from core.scalar import ScalarMode


def scalar_to_json(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    return float(value)


def scalar_from_json(item, mode: ScalarMode):
    """
    Read a scalar written by `scalar_to_json`, or a "num/den" string, or a plain number.
    """
    if isinstance(item, dict):
        try:
            item = Fraction(int(item["num"]), int(item["den"]))
        except (KeyError, ValueError, TypeError, ZeroDivisionError):
            raise DiceFileError("Couldn't read rational `{}`.".format(item)) from None
        if mode is ScalarMode.FLOAT:
            raise DiceFileError("Rational `{}` found in a float mode file.".format(item))
        return item
    if isinstance(item, bool) or not isinstance(item, (str, Integral, float)):
        raise DiceFileError("Couldn't read scalar `{}`.".format(item))
    if mode is ScalarMode.RATIONAL and isinstance(item, float):
        raise DiceFileError("Float `{}` found in a rational mode file, write it as \"num/den\".".format(item))
    try:
        return mode.coerce(item)
    except Exception as e:
        raise DiceFileError(str(e)) from None


def die_to_json(die):
    return [scalar_to_json(w) for w in die.weights]


def distribution_to_json(dist):
    return {
        "m": dist.m,
        "n": dist.n,
        "mode": dist.mode.value,
        "uniform_value": scalar_to_json(dist.uniform_value),
        "c": [{"j": j, "c_j": scalar_to_json(value)} for j, value in dist.items()],
    }


def _csv_scalar(value):
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def distribution_rows(dist):
    """
    CSV header and rows, one row per sum `j`.
    Rationals are written as exact `num/den` strings, floats with full precision.
    """
    return ("j", "c_j"), [(j, _csv_scalar(value)) for j, value in dist.items()]
