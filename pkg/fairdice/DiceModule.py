from meta import log, client


class DiceCommand:
    """
    A registered subcommand.

    `flags` follow the module declaration syntax:
    `name=` takes a value, `<name>` is positional, and a bare `name` is a switch.
    """
    __slots__ = ('name', 'func', 'desc', 'flags', 'module')

    def __init__(self, name, func, module, desc=None, flags=()):
        self.name = name
        self.func = func
        self.module = module
        self.desc = desc or (func.__doc__ or '').strip().splitlines()[0]
        self.flags = tuple(flags)


class DiceModule:
    """
    A named group of subcommands, registered with the client on creation.
    """
    name = "Base Dice Module"

    def __init__(self, name):
        self.name = name
        self.cmds = []
        client.add_module(self)

    def cmd(self, name, desc=None, flags=()):
        """
        Decorator registering a subcommand handler `func(ctx, flags) -> exit code`.
        """
        def decorator(func):
            command = DiceCommand(name, func, self, desc=desc, flags=flags)
            self.cmds.append(command)
            log("Registered command '{}'.".format(name), context=self.name, level=5)
            return func
        return decorator
