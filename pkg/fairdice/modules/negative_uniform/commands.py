import math

from data import dice_payload, scalar_to_json
from meta import EXIT_OK, EXIT_IMPOSSIBLE, log
from settings import sides, dice_count, parse_flag, UserInputError
from utils.lib import parse_groups, tabulate_rows

from .module import module
from .construction import construct_uniform_dice, iter_partitions, Outcome


PARTITION_LIMIT = 5000


def result_to_json(result):
    if result.outcome is Outcome.IMPOSSIBLE:
        return {"outcome": result.outcome.value, "reason": result.reason}
    payload = {"outcome": result.outcome.value, "m": result.m}
    payload.update(dice_payload(result.dice, allow_negative=True))
    payload["partition"] = [list(group) for group in result.partition]
    payload["max_uniform_error"] = result.max_uniform_error
    payload["max_abs_weight"] = result.max_abs_weight
    return payload


def _partition_count(n, m):
    size = (n - 1) // 2
    return math.factorial(m * size) // math.factorial(size) ** m


@module.cmd(
    "construct",
    desc="Construct m n-sided dice with real weights whose sum is exactly uniform, if n is odd.",
    flags=('n=', 'm=', 'partition=', 'all-partitions')
)
def cmd_construct(ctx, flags):
    """
    Usage``:
        fairdice construct --n <sides> --m <dice> [--partition 1,2;3,4] [--all-partitions]
    Description:
        Splits the quadratic factors of 1 + x + ... + x^(m(n-1)) between the dice.
        Exits with code 3 when n is even, since no such dice exist.
    """
    n = parse_flag(sides, flags.n)
    m = parse_flag(dice_count, flags.m)
    partition = parse_groups(flags.partition) if flags.partition is not None else None

    result = construct_uniform_dice(n, m, partition)
    if result.outcome is Outcome.IMPOSSIBLE:
        ctx.reply("impossible: n even")
        ctx.emit(result_to_json(result), mode="float")
        return EXIT_IMPOSSIBLE

    ctx.reply("Uniform {}-sided dice with real weights (partition {}):".format(
        n, "; ".join(",".join(str(k) for k in group) for group in result.partition)
    ))
    ctx.reply(ctx.dice_table(result.dice))
    ctx.reply()
    ctx.reply("max uniform error: {:.3g}".format(result.max_uniform_error))
    ctx.reply("max |weight|: {}".format(ctx.fmt(result.max_abs_weight)))
    payload = result_to_json(result)

    if flags.all_partitions:
        total = _partition_count(n, m)
        if total > PARTITION_LIMIT:
            raise UserInputError(
                "There are {} partitions for n = {}, m = {}, listing at most {}.".format(total, n, m, PARTITION_LIMIT)
            )
        log("Constructing dice for all {} partitions.".format(total), context=module.name)
        results = [construct_uniform_dice(n, m, groups) for groups in iter_partitions(n, m)]
        ctx.reply()
        ctx.reply(tabulate_rows(
            ("partition", "max uniform error", "max |weight|"),
            [("; ".join(",".join(str(k) for k in group) for group in other.partition),
              "{:.3g}".format(other.max_uniform_error),
              ctx.fmt(other.max_abs_weight))
             for other in results]
        ))
        payload["partitions"] = [
            {
                "partition": [list(group) for group in other.partition],
                "max_uniform_error": other.max_uniform_error,
                "max_abs_weight": scalar_to_json(other.max_abs_weight),
            }
            for other in results
        ]

    rows = [
        [index, side, repr(die.weight(side))]
        for index, die in enumerate(result.dice, start=1)
        for side in range(1, n + 1)
    ]
    ctx.emit(payload, csv_table=(("die", "side", "weight"), rows), mode="float")
    return EXIT_OK
