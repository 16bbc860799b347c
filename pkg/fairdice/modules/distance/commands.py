import logging

from core import ScalarMode, convolve, distance_to_uniform
from data import read_dice_file, dice_payload, distribution_rows, distribution_to_json, scalar_to_json
from meta import EXIT_OK, log
from utils.lib import parse_timestamp

from .module import module


def _in_mode(dice, mode):
    if mode is ScalarMode.FLOAT:
        return [die.as_float() for die in dice]
    return [die.as_rational() for die in dice]


@module.cmd(
    "distance",
    desc="Print the sum distribution of the dice in a dice file and its distance D from uniform.",
    flags=('<file>',)
)
def cmd_distance(ctx, flags):
    """
    Usage``:
        fairdice distance <file> [--mode rational|float] [--json PATH] [--csv PATH]
    Description:
        Reads any JSON output of this tool, or a hand written dice file.
        The scalar mode defaults to the mode recorded in the file.
    """
    dice, payload = read_dice_file(flags.file)

    manifest = payload.get("manifest") or {}
    written = parse_timestamp(manifest.get("timestamp"))
    if written is not None:
        log("Dice file was written by `{}` at {}.".format(manifest.get("command"), written.isoformat()),
            context=module.name, level=logging.INFO)

    mode = ctx.mode(default=dice[0].mode)
    dice = _in_mode(dice, mode)
    dist = convolve(dice)
    d_value = distance_to_uniform(dist)

    ctx.reply("Sum distribution of {} dice with {} sides:".format(dist.m, dist.n))
    ctx.reply(ctx.profile_table(dist))
    ctx.reply()
    ctx.reply("D = {}".format(ctx.fmt(d_value)))

    body = dice_payload(dice)
    body["m"] = dist.m
    body["d_value"] = scalar_to_json(d_value)
    body["profile"] = distribution_to_json(dist)
    ctx.emit(body, csv_table=distribution_rows(dist), mode=mode)
    return EXIT_OK
