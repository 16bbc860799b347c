import sys

from meta import client

import core  # noqa

from utils import ctx_addons  # noqa

import modules  # noqa


def main(argv=None):
    """
    Run one command line, returning the process exit code.
    """
    return client.run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
