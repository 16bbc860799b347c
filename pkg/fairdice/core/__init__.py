from .errors import FairDiceError, InvalidInputError, ParityError, UnsupportedInputError, DiceFileError  # noqa
from .scalar import ScalarMode, format_scalar  # noqa
from .die import Die, DieReport, validate_die  # noqa
from .distribution import SumDistribution, convolve, distance_to_uniform, sum_of_squares  # noqa
from .convolution import convolve_pair, convolve_all  # noqa
