from .module import module

from . import commands
