from .base import *  # noqa
from .setting_types import *  # noqa

from .run_settings import RunSettings  # noqa
from .flag_settings import sides, dice_count, parse_flag  # noqa
