from .module import module

from . import theorem
from . import lemmas
from . import conjecture
from . import commands

from .theorem import OptimalPair, optimal_pair, optimal_sum_profile, d_min, point_mass_die, plateau_die  # noqa
from .lemmas import amgm_residual, lemma2_decomposition, LowerBoundCurve, lower_bound_curve, lower_bound_f  # noqa
from .conjecture import conjectured_m_dice, conjectured_d, gasarch_kruskal_die, CONJECTURE_STATUS  # noqa
