import settings
from utils.lib import DotDict

from .descent import OptimizerConfig


_defaults = OptimizerConfig.__dataclass_fields__


class OptimizerSettings(settings.ObjectSettings):
    """
    Optimizer parameters, resolved from command flags, then the `[OPTIMIZER]` configuration section,
    then the built-in defaults.
    """
    settings = DotDict()

    def config(self, seed):
        values = self.values()
        return OptimizerConfig(seed=seed, **values)


@OptimizerSettings.attach_setting
class starts(settings.Integer, settings.Setting):
    attr_name = 'starts'
    section = 'OPTIMIZER'
    _default = _defaults['starts'].default
    _min = 1

    display_name = "Random starts"
    desc = "Number of independent descents."


@OptimizerSettings.attach_setting
class max_iters(settings.Integer, settings.Setting):
    attr_name = 'max_iters'
    section = 'OPTIMIZER'
    _default = _defaults['max_iters'].default
    _min = 1

    display_name = "Iterations per start"
    desc = "Iteration limit for each descent."


@OptimizerSettings.attach_setting
class step(settings.Float, settings.Setting):
    attr_name = 'step'
    section = 'OPTIMIZER'
    _default = _defaults['step'].default
    _min = 0
    _min_exclusive = True

    display_name = "Initial step"
    desc = "First trial step of every descent."


@OptimizerSettings.attach_setting
class armijo_beta(settings.Float, settings.Setting):
    attr_name = 'armijo_beta'
    section = 'OPTIMIZER'
    _default = _defaults['armijo_beta'].default
    _min = 0
    _max = 1
    _min_exclusive = True
    _max_exclusive = True

    display_name = "Backtracking factor"
    desc = "Factor applied to a rejected trial step."


@OptimizerSettings.attach_setting
class armijo_c(settings.Float, settings.Setting):
    attr_name = 'armijo_c'
    section = 'OPTIMIZER'
    _default = _defaults['armijo_c'].default
    _min = 0
    _max = 1
    _min_exclusive = True
    _max_exclusive = True

    display_name = "Sufficient decrease"
    desc = "Fraction of the predicted decrease a step must achieve."


@OptimizerSettings.attach_setting
class grad_tol(settings.Float, settings.Setting):
    attr_name = 'grad_tol'
    section = 'OPTIMIZER'
    _default = _defaults['grad_tol'].default
    _min = 0
    _min_exclusive = True

    display_name = "Gradient tolerance"
    desc = "Projected gradient norm below which a descent has converged."


@OptimizerSettings.attach_setting
class workers(settings.WorkerCount, settings.Setting):
    attr_name = 'workers'
    section = 'OPTIMIZER'
    _default = None

    display_name = "Workers"
    desc = "Processes running starts in parallel."
