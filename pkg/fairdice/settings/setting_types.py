import math
from typing import Any, Optional

import psutil

from core.scalar import ScalarMode

from .base import UserInputError


def _unset(userstr: Optional[str]):
    return userstr is None or userstr.strip().lower() in ("", "none")


class SettingType:
    """
    Converter mixin for a `Setting`.

    User strings parse into data, data resolves to the value handed to the caller,
    and data formats back into a string for tables and manifests.
    """
    accepts: str = None

    @classmethod
    def _data_to_value(cls, data: Any):
        return data

    @classmethod
    def _parse_userstr(cls, userstr: str):
        raise NotImplementedError

    @classmethod
    def _format_data(cls, data: Any):
        return None if data is None else str(data)


class _Bounded(SettingType):
    """
    Numeric type with optional bounds, each optionally exclusive.
    """
    _cast = None
    _noun = "number"

    _min = None
    _max = None
    _min_exclusive: bool = False
    _max_exclusive: bool = False

    @classmethod
    def _parse_userstr(cls, userstr: str):
        if _unset(userstr):
            return None
        try:
            num = cls._cast(userstr.strip())
        except ValueError:
            raise UserInputError("`{}` is not a valid {}.".format(userstr.strip(), cls._noun)) from None
        cls._check_bounds(num)
        return num

    @classmethod
    def _check_bounds(cls, num):
        if cls._min is not None:
            if num < cls._min or (cls._min_exclusive and num == cls._min):
                relation = "greater than" if cls._min_exclusive else "at least"
                raise UserInputError("Expected a {} {} `{}`, got `{}`.".format(cls._noun, relation, cls._min, num))
        if cls._max is not None:
            if num > cls._max or (cls._max_exclusive and num == cls._max):
                relation = "less than" if cls._max_exclusive else "at most"
                raise UserInputError("Expected a {} {} `{}`, got `{}`.".format(cls._noun, relation, cls._max, num))


class Integer(_Bounded):
    accepts = "An integer."
    _cast = int
    _noun = "integer"


class Float(_Bounded):
    """
    Finite decimal number.
    """
    accepts = "A decimal number."
    _cast = float
    _noun = "number"

    @classmethod
    def _check_bounds(cls, num):
        if not math.isfinite(num):
            raise UserInputError("Expected a finite number, got `{}`.".format(num))
        super()._check_bounds(num)

    @classmethod
    def _format_data(cls, data: Optional[float]):
        return None if data is None else "{:g}".format(data)


class String(SettingType):
    """
    Free text, or one of `_options` (case insensitive) when they are given.
    """
    accepts = "Any text."
    _options: set = None

    @classmethod
    def _parse_userstr(cls, userstr: str):
        if _unset(userstr):
            return None
        userstr = userstr.strip()
        if cls._options is None:
            return userstr
        if userstr.lower() not in cls._options:
            raise UserInputError("Expected one of `{}`, got `{}`.".format("`, `".join(sorted(cls._options)), userstr))
        return userstr.lower()


class Mode(String):
    """
    Scalar mode name, resolving to a `ScalarMode`.
    """
    accepts = "Either `rational` or `float`."
    _options = {mode.value for mode in ScalarMode}

    @classmethod
    def _data_to_value(cls, data: Optional[str]):
        return None if data is None else ScalarMode.parse(data)


class WorkerCount(Integer):
    """
    Number of worker processes.
    Stored as `0` for `auto`, which resolves to the physical core count.
    """
    accepts = "A positive integer, or `auto` for one per physical core."
    _min = 0

    @classmethod
    def _parse_userstr(cls, userstr: str):
        if userstr.strip().lower() == 'auto':
            return 0
        return super()._parse_userstr(userstr)

    @classmethod
    def _data_to_value(cls, data: Optional[int]):
        if data is None:
            return 1
        if data == 0:
            return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
        return data

    @classmethod
    def _format_data(cls, data: Optional[int]):
        if data is None:
            return "1"
        if data == 0:
            return "auto ({})".format(cls._data_to_value(data))
        return str(data)
