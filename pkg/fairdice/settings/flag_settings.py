"""
Settings parsed directly from command flags.
"""
from .base import Setting, UserInputError
from . import setting_types


class sides(setting_types.Integer, Setting):
    attr_name = 'n'
    _min = 2
    _max = 10000

    display_name = "Sides"
    desc = "Number of sides on each die."


class dice_count(setting_types.Integer, Setting):
    attr_name = 'm'
    _min = 2
    _max = 1000

    display_name = "Dice"
    desc = "Number of dice rolled together."


def parse_flag(setting, userstr, required=True):
    """
    Parse a command flag through its setting.
    Missing flags raise `UserInputError` if required, and otherwise give the setting default.
    """
    if userstr is None:
        if required:
            raise UserInputError("Missing required flag `{}`.".format(setting._flag_name()))
        return setting(None).value
    return setting.parse(userstr).value
