from DiceContext import DiceContext as Context

from .lib import tabulate_rows


@Context.util
def dice_table(ctx, dice, names=None):
    """
    Side-by-side table of dice weights, one row per side.
    """
    names = names or ["die {}".format(i) for i in range(1, len(dice) + 1)]
    rows = [
        [side] + [ctx.fmt(die.weight(side)) for die in dice]
        for side in range(1, dice[0].n + 1)
    ]
    return tabulate_rows(["side"] + list(names), rows)


@Context.util
def profile_table(ctx, dist):
    """
    Table of the sum distribution, one row per sum `j`.
    """
    return tabulate_rows(["j", "c_j"], [(j, ctx.fmt(value)) for j, value in dist.items()])
