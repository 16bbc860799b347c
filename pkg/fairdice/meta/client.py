import logging
import traceback

from constants import TOOL_VERSION
from core.errors import InvalidInputError

from .args import build_parser
from .config import conf, default_config_path
from .logger import log, set_level


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IMPOSSIBLE = 3


class DiceClient:
    """
    Command dispatcher.
    Collects the modules, parses the command line, and maps outcomes to exit codes.
    """
    version = TOOL_VERSION

    def __init__(self):
        self.modules = []
        self.conf = conf

    def add_module(self, module):
        self.modules.append(module)

    @property
    def cmds(self):
        return {cmd.name: cmd for module in self.modules for cmd in module.cmds}

    def run(self, argv=None):
        """
        Execute a single command line, returning the exit code.
        """
        # Deferred so the context can import the client freely
        from DiceContext import DiceContext

        parser = build_parser(self.cmds.values())
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        self.conf.load(args.config or default_config_path())
        set_level(logging.DEBUG if args.verbose else self.conf.get('log_level', 'WARNING'))

        cmd = self.cmds[args.command]
        log("Running command '{}'.".format(cmd.name), context="CLI", level=logging.DEBUG)
        try:
            ctx = DiceContext(self, cmd, args)
            return cmd.func(ctx, ctx.flags)
        except InvalidInputError as e:
            DiceContext.error(e.msg or str(e))
            return EXIT_USAGE
        except Exception as e:
            full_traceback = traceback.format_exc()
            only_error = "".join(traceback.TracebackException.from_exception(e).format_exception_only())
            log(("Caught an unhandled exception while executing command '{cmdname}' "
                 "from module '{module}'.\n"
                 "{traceback}").format(
                     cmdname=cmd.name,
                     module=cmd.module.name,
                     traceback=full_traceback
                 ),
                context="CLI",
                level=logging.ERROR)
            DiceContext.error("Something went wrong: {}".format(only_error.strip()))
            return EXIT_FAILURE


client = DiceClient()
