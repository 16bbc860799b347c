"""
Dice files.

The canonical schema, shared by every subcommand's JSON output and by `distance` input, is
    {"n": int, "mode": "rational" | "float", "allow_negative": bool, "dice": [[w, ...], ...]}
with any other keys ignored on reading.
"""
import csv
import json
from pathlib import Path

from core.die import Die, validate_die
from core.errors import DiceFileError
from core.scalar import ScalarMode
from meta import log

from .formatters import scalar_from_json, die_to_json


def dice_payload(dice, allow_negative=None):
    """
    Canonical dice file fields for a list of dice sharing `n` and mode.
    """
    dice = list(dice)
    return {
        "n": dice[0].n,
        "mode": dice[0].mode.value,
        "allow_negative": any(die.allow_negative for die in dice) if allow_negative is None else allow_negative,
        "dice": [die_to_json(die) for die in dice],
    }


def parse_dice(payload):
    """
    Build and validate the dice described by a parsed dice file.

    Returns: List[Die]
    """
    if not isinstance(payload, dict) or "dice" not in payload:
        raise DiceFileError("Dice file must be a JSON object with a `dice` list.")
    rows = payload["dice"]
    if not isinstance(rows, list) or not rows or not all(isinstance(row, list) for row in rows):
        raise DiceFileError("`dice` must be a nonempty list of weight lists.")

    try:
        mode = ScalarMode.parse(payload.get("mode", "rational"))
    except Exception as e:
        raise DiceFileError(str(e)) from None
    allow_negative = payload.get("allow_negative", False)
    if not isinstance(allow_negative, bool):
        raise DiceFileError("`allow_negative` must be true or false.")

    n = payload.get("n", len(rows[0]))
    if not isinstance(n, int) or isinstance(n, bool) or any(len(row) != n for row in rows):
        raise DiceFileError("Every die must have `n` = {} weights.".format(n))

    dice = []
    for index, row in enumerate(rows, start=1):
        try:
            die = Die(tuple(scalar_from_json(item, mode) for item in row), mode, allow_negative)
        except DiceFileError:
            raise
        except Exception as e:
            raise DiceFileError("Die {}: {}".format(index, e)) from None
        report = validate_die(die)
        if not report.valid:
            raise DiceFileError("Die {} is invalid: {}.".format(index, "; ".join(report.problems)))
        dice.append(die)
    return dice


def read_dice_file(path):
    """
    Read and validate a dice file.

    Returns: Tuple[List[Die], dict]
        The dice, and the raw payload for access to any extra keys such as the run manifest.
    """
    try:
        with open(path) as f:
            payload = json.load(f)
    except OSError as e:
        raise DiceFileError("Couldn't open dice file `{}`: {}".format(path, e.strerror)) from None
    except json.JSONDecodeError as e:
        raise DiceFileError("Couldn't parse dice file `{}`: {}".format(path, e)) from None
    dice = parse_dice(payload)
    log("Read {} dice with {} sides from `{}`.".format(len(dice), dice[0].n, path), context="DATA")
    return dice, payload


def write_dice_file(path, dice, indent=2, **extra):
    """
    Write `dice` as a dice file, with any `extra` keys alongside the canonical fields.
    """
    payload = dice_payload(dice)
    payload.update(extra)
    write_json(path, payload, indent=indent)
    return payload


def dump_json(payload, indent=2):
    return json.dumps(payload, indent=indent) + "\n"


def write_json(path, payload, indent=2):
    Path(path).write_text(dump_json(payload, indent=indent))
    log("Wrote JSON output to `{}`.".format(path), context="DATA")


def write_csv(path, header, rows):
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(header)
        writer.writerows(rows)
    log("Wrote CSV output to `{}`.".format(path), context="DATA")
