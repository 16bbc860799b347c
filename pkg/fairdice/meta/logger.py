import sys
import logging


logger = logging.getLogger('fairdice')
logger.propagate = False
logger.setLevel(logging.WARNING)

log_fmt = logging.Formatter(
    fmt='[{asctime}][{levelname:^8}] {message}',
    datefmt='%d/%m | %H:%M:%S',
    style='{'
)


class LessThanFilter(logging.Filter):
    """
    Passes records strictly below `exclusive_maximum`.
    """
    def __init__(self, exclusive_maximum, name=""):
        super().__init__(name)
        self.max_level = exclusive_maximum

    def filter(self, record):
        return record.levelno < self.max_level


def _stream_handler(stream, level, below=None):
    handler = logging.StreamHandler(stream)
    handler.setLevel(level)
    handler.setFormatter(log_fmt)
    if below is not None:
        handler.addFilter(LessThanFilter(below))
    logger.addHandler(handler)
    return handler


# Progress on stdout, problems on stderr
logging_handler_out = _stream_handler(sys.stdout, logging.DEBUG, below=logging.WARNING)
logging_handler_err = _stream_handler(sys.stderr, logging.WARNING)


def _gutter(index, count):
    if count == 1:
        return '─ '
    if index == 0:
        return '┌ '
    return '└ ' if index == count - 1 else '│ '


def log(message, context="GLOBAL", level=logging.INFO):
    """
    Log `message` under a centred `context` tag.
    Multi-line messages are drawn with a box gutter so they stay grouped when grepped.
    """
    if not logger.isEnabledFor(level):
        return
    tag = str(context).center(16, '=')
    lines = str(message).splitlines() or ['']
    for i, line in enumerate(lines):
        logger.log(level, '[{}] {}{}'.format(tag, _gutter(i, len(lines)), line))


def set_level(level):
    """
    Set the application log level from a level name or number.
    Unknown names fall back to WARNING.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.strip().upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)
