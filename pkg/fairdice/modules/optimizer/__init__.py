from .module import module

from . import projection
from . import gradient
from . import descent
from . import symmetry
from . import settings
from . import commands

from .projection import project_simplex, project_rows, projected_gradient_norm  # noqa
from .gradient import gradient_d, objective, objective_and_gradient, dice_matrix  # noqa
from .descent import OptimizerConfig, OptimizationResult, StartSummary, minimize, descend  # noqa
from .symmetry import check_symmetry, max_deviation  # noqa
from .settings import OptimizerSettings  # noqa
