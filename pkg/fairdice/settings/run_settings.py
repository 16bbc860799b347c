from utils.lib import DotDict

from .base import ObjectSettings, Setting
from . import setting_types


class RunSettings(ObjectSettings):
    """
    Settings shared by every command.
    """
    settings = DotDict()


@RunSettings.attach_setting
class seed(setting_types.Integer, Setting):
    attr_name = 'seed'
    section = 'DEFAULT'
    _default = 0
    _min = 0
    _max = 2 ** 63 - 1

    display_name = "Seed"
    desc = "Random seed for every stochastic computation."


@RunSettings.attach_setting
class mode(setting_types.Mode, Setting):
    attr_name = 'mode'
    section = 'DEFAULT'
    _default = None

    display_name = "Scalar mode"
    desc = "Scalar mode for commands supporting exact arithmetic."


@RunSettings.attach_setting
class decimal_digits(setting_types.Integer, Setting):
    attr_name = 'decimal_digits'
    section = 'DEFAULT'
    _default = 12
    _min = 1
    _max = 17

    display_name = "Decimal digits"
    desc = "Significant digits used when printing decimals."


@RunSettings.attach_setting
class indent(setting_types.Integer, Setting):
    attr_name = 'indent'
    section = 'OUTPUT'
    _default = 2
    _min = 0
    _max = 8

    display_name = "JSON indent"
    desc = "Indentation of JSON output."
