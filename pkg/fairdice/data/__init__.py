from .formatters import (  # noqa
    scalar_to_json, scalar_from_json, die_to_json, distribution_to_json, distribution_rows
)
from .dicefiles import read_dice_file, write_dice_file, dice_payload, write_json, write_csv, dump_json  # noqa
