from core import ScalarMode, convolve, distance_to_uniform
from data import dice_payload, distribution_rows, distribution_to_json, scalar_to_json
from meta import EXIT_OK, log
from settings import sides, dice_count, parse_flag

from .module import module
from .theorem import optimal_pair, THEOREM_TAG
from .conjecture import conjectured_m_dice, CONJECTURE_STATUS


@module.cmd(
    "optimal",
    desc="Print the optimal pair of two n-sided dice, its minimal distance and sum profile.",
    flags=('n=',)
)
def cmd_optimal(ctx, flags):
    """
    Usage``:
        fairdice optimal --n <sides> [--mode rational|float] [--json PATH] [--csv PATH]
    """
    n = parse_flag(sides, flags.n)
    mode = ctx.mode()

    pair = optimal_pair(n)
    dice = pair.dice if mode is ScalarMode.RATIONAL else tuple(die.as_float() for die in pair.dice)
    dist = convolve(dice)
    d_value = pair.d_min if mode is ScalarMode.RATIONAL else distance_to_uniform(dist)
    log("Optimal pair for n = {} has D = {}.".format(n, pair.d_min), context=module.name)

    ctx.reply("Optimal pair of {}-sided dice (unique up to swapping):".format(n))
    ctx.reply(ctx.dice_table(dice, names=("point-mass", "plateau")))
    ctx.reply()
    ctx.reply("D_min = {}".format(ctx.fmt(d_value)))
    ctx.reply()
    ctx.reply(ctx.profile_table(dist))

    payload = {"theorem": THEOREM_TAG}
    payload.update(dice_payload(dice, allow_negative=False))
    payload["d_min"] = scalar_to_json(d_value)
    payload["profile"] = distribution_to_json(dist)
    ctx.emit(payload, csv_table=distribution_rows(dist), mode=mode)
    return EXIT_OK


@module.cmd(
    "conjecture",
    desc="Print the conjectured optimal weighting of m n-sided dice (unproven for m > 2).",
    flags=('n=', 'm=')
)
def cmd_conjecture(ctx, flags):
    """
    Usage``:
        fairdice conjecture --n <sides> --m <dice> [--mode rational|float] [--json PATH] [--csv PATH]
    """
    n = parse_flag(sides, flags.n)
    m = parse_flag(dice_count, flags.m)
    mode = ctx.mode()

    dice = conjectured_m_dice(n, m)
    if mode is ScalarMode.FLOAT:
        dice = tuple(die.as_float() for die in dice)
    dist = convolve(dice)
    d_value = distance_to_uniform(dist)

    ctx.reply("CONJECTURE: weighting of {} {}-sided dice believed to minimise D.".format(m, n))
    ctx.reply(ctx.dice_table(dice))
    ctx.reply()
    ctx.reply("D = {}".format(ctx.fmt(d_value)))

    payload = {"status": CONJECTURE_STATUS, "m": m}
    payload.update(dice_payload(dice, allow_negative=False))
    payload["d_value"] = scalar_to_json(d_value)
    payload["profile"] = distribution_to_json(dist)
    ctx.emit(payload, csv_table=distribution_rows(dist), mode=mode)
    return EXIT_OK
