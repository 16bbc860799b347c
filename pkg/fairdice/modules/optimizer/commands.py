import logging

from core import ScalarMode
from data import dice_payload
from meta import EXIT_OK, log
from settings import sides, dice_count, parse_flag, UserInputError

from modules.closed_form import optimal_pair, conjectured_m_dice, conjectured_d, d_min

from .module import module
from .descent import minimize
from .settings import OptimizerSettings
from .symmetry import check_symmetry, max_deviation


SYMMETRY_TOL = 1e-6


@module.cmd(
    "optimize",
    desc="Search numerically for the m dice whose sum is closest to uniform.",
    flags=('n=', 'm=', 'starts=', 'max-iters=', 'step=', 'armijo-beta=', 'armijo-c=', 'grad-tol=', 'workers=',
           'identical')
)
def cmd_optimize(ctx, flags):
    """
    Usage``:
        fairdice optimize --n <sides> --m <dice> [--seed S] [--starts K] [--workers W|auto] [--identical]
    Description:
        Runs multi-start projected gradient descent and reports the best dice found.
        For two dice the result is compared against the optimal pair, for more dice against
        the conjectured family. Non-convergence is reported, not treated as a failure.
        The optimizer works in float mode only, so `--mode rational` is rejected.
    """
    mode = ctx.settings.mode
    if mode.value is ScalarMode.RATIONAL:
        if mode.source == 'flag':
            raise UserInputError("`optimize` works in float mode only, `--mode rational` is not supported.")
        log("Ignoring `mode = rational` from the configuration, the optimizer works in float mode.",
            context=module.name, level=logging.WARNING)

    n = parse_flag(sides, flags.n)
    m = parse_flag(dice_count, flags.m)
    opt_settings = OptimizerSettings(
        ctx.conf,
        **{name: flags.get(name) for name in OptimizerSettings.settings}
    )
    cfg = opt_settings.config(seed=ctx.seed)
    result = minimize(n, m, cfg, identical=bool(flags.identical))

    ctx.reply("Optimizer configuration:")
    ctx.reply(opt_settings.tabulated().rstrip())
    ctx.reply("Seed: {}".format(cfg.seed))
    ctx.reply()
    ctx.reply("Best dice ({}{}):".format(result.claim, ", identical dice" if result.identical else ""))
    ctx.reply(ctx.dice_table(result.dice))
    ctx.reply()
    ctx.reply("D = {:.17g}".format(result.d_value))
    ctx.reply("converged: {} (projected gradient norm {:.3g}, {} iterations, start {})".format(
        str(result.converged).lower(), result.grad_norm, result.iterations_used, result.best_start_index
    ))

    symmetric = check_symmetry(result.dice, SYMMETRY_TOL)
    ctx.reply("symmetric: {}".format(", ".join(str(flag).lower() for flag in symmetric)))

    if m == 2:
        reference = optimal_pair(n).dice
        comparison = {
            "reference": "thm1",
            "reference_d": float(d_min(n)),
            "d_gap": result.d_value - float(d_min(n)),
            "max_weight_deviation": max_deviation(result.dice, reference),
        }
        ctx.reply("deviation from the optimal pair: D gap {:.3g}, max weight deviation {:.3g}".format(
            comparison["d_gap"], comparison["max_weight_deviation"]
        ))
    else:
        reference = conjectured_m_dice(n, m)
        reference_d = float(conjectured_d(n, m))
        comparison = {
            "reference": "conjecture",
            "reference_d": reference_d,
            "d_gap": result.d_value - reference_d,
            "max_weight_deviation": max_deviation(result.dice, reference),
        }
        ctx.reply("deviation from the conjectured dice: D gap {:.3g}, max weight deviation {:.3g}".format(
            comparison["d_gap"], comparison["max_weight_deviation"]
        ))

    payload = dice_payload(result.dice, allow_negative=False)
    payload.update({
        "m": m,
        "d_value": result.d_value,
        "converged": result.converged,
        "grad_norm": result.grad_norm,
        "iterations_used": result.iterations_used,
        "best_start_index": result.best_start_index,
        "claim": result.claim,
        "identical": result.identical,
        "symmetric": list(symmetric),
        "comparison": comparison,
        "config": cfg.to_json(),
        "seed": cfg.seed,
        "starts": [summary.to_json() for summary in result.starts],
    })
    rows = [
        [index, side, repr(die.weight(side))]
        for index, die in enumerate(result.dice, start=1)
        for side in range(1, n + 1)
    ]
    ctx.emit(payload, csv_table=(("die", "side", "weight"), rows), mode="float")
    return EXIT_OK
