from .logger import log, logger, set_level  # noqa
from .config import conf, Conf  # noqa
from .client import client, EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_IMPOSSIBLE  # noqa
