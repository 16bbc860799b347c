import argparse

from constants import CONFIG_FILE


# ------------------------------
# Global commandline arguments
# ------------------------------
# Shared by every subcommand, given after the subcommand name.
global_parser = argparse.ArgumentParser(add_help=False)
global_parser.add_argument('--conf',
                           dest='config',
                           default=None,
                           help="Path to configuration file (default: {}).".format(CONFIG_FILE))
global_parser.add_argument('--json',
                           dest='json_path',
                           default=None,
                           help="Write machine-readable JSON output to this path.")
global_parser.add_argument('--csv',
                           dest='csv_path',
                           default=None,
                           help="Write CSV output to this path.")
global_parser.add_argument('--seed',
                           dest='seed',
                           default=None,
                           help="Random seed, falls back to $FAIRDICE_SEED.")
global_parser.add_argument('--mode',
                           dest='mode',
                           default=None,
                           choices=('rational', 'float'),
                           help="Scalar mode used for the computation.")
global_parser.add_argument('--no-timestamp',
                           dest='timestamp',
                           action='store_false',
                           help="Omit the timestamp from JSON output.")
global_parser.add_argument('--verbose',
                           dest='verbose',
                           action='store_true',
                           help="Log debugging information.")


def build_parser(commands):
    """
    Build the complete parser from the registered commands.

    Parameters
    ----------
    commands: List[DiceCommand]
        Commands registered by the loaded modules.
        Each command contributes one subparser with its flags.

    Returns: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog='fairdice',
        description="Weighted dice whose sums are as close as possible to uniform."
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    for cmd in commands:
        sub = subparsers.add_parser(
            cmd.name,
            help=cmd.desc,
            description=cmd.desc,
            parents=[global_parser]
        )
        for flag in cmd.flags:
            if flag.endswith('='):
                sub.add_argument('--' + flag[:-1], dest=flag[:-1].replace('-', '_'), default=None)
            elif flag.startswith('<'):
                sub.add_argument(flag.strip('<>'))
            else:
                sub.add_argument('--' + flag, dest=flag.replace('-', '_'), action='store_true')
    return parser
