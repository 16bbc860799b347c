from .module import module

from . import factors
from . import construction
from . import commands

from .factors import QuadraticFactor, t_polynomial_factors, expand_factors, leja_order  # noqa
from .construction import (  # noqa
    Outcome, ConstructionResult, construct_uniform_dice, verify_uniform,
    default_partition, check_partition, iter_partitions, IMPOSSIBLE_REASON
)
