import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from constants import SEED_ENV, TOOL_VERSION
from core.scalar import ScalarMode, format_scalar
from data import write_json, write_csv
from settings import RunSettings
from utils.lib import DotDict, utc_now

from meta.args import global_parser


_GLOBAL_DESTS = {action.dest for action in global_parser._actions} | {'command'}


@dataclass(frozen=True)
class RunManifest:
    """
    Everything needed to reproduce a run, echoed into every JSON output.
    """
    command: str
    parameters: dict
    seed: int
    mode: Optional[str]
    outputs: dict
    version: str = TOOL_VERSION
    timestamp: Optional[str] = field(default=None)

    def to_json(self):
        payload = {
            "command": self.command,
            "parameters": dict(sorted(self.parameters.items())),
            "seed": self.seed,
            "mode": self.mode,
            "outputs": self.outputs,
            "version": self.version,
        }
        if self.timestamp is not None:
            payload["timestamp"] = self.timestamp
        return payload


class DiceContext:
    """
    Per-invocation state handed to command handlers: parsed flags, resolved run settings,
    and output helpers.
    """
    __slots__ = ('client', 'cmd', 'args', 'flags', 'settings')

    def __init__(self, client, cmd, args):
        self.client = client
        self.cmd = cmd
        self.args = args
        self.flags = DotDict(
            (key, value) for key, value in vars(args).items() if key not in _GLOBAL_DESTS
        )
        self.settings = RunSettings(
            client.conf,
            seed=args.seed if args.seed is not None else os.environ.get(SEED_ENV) or None,
            mode=args.mode
        )

    @classmethod
    def util(cls, util_func):
        """
        Decorator to make a utility function available as a DiceContext instance method.
        """
        setattr(cls, util_func.__name__, util_func)
        return util_func

    @property
    def conf(self):
        return self.client.conf

    @property
    def seed(self):
        return self.settings.seed.value

    def mode(self, default=ScalarMode.RATIONAL):
        return self.settings.mode.value or default

    @property
    def digits(self):
        return self.settings.decimal_digits.value

    def fmt(self, value):
        return format_scalar(value, self.digits)

    def manifest(self, mode=None):
        return RunManifest(
            command=self.cmd.name,
            parameters={key: value for key, value in self.flags.items() if value is not None},
            seed=self.seed,
            mode=mode.value if isinstance(mode, ScalarMode) else mode,
            outputs={"json": self.args.json_path, "csv": self.args.csv_path},
            timestamp=utc_now().isoformat() if self.args.timestamp else None
        )

    # Output
    def reply(self, text=""):
        print(text, file=sys.stdout)

    @staticmethod
    def error(text):
        print("error: {}".format(text), file=sys.stderr)

    def emit(self, payload, csv_table=None, mode=None):
        """
        Write the requested machine-readable outputs.

        Parameters
        ----------
        payload: dict
            JSON body, the run manifest is added under `manifest`.
        csv_table: Optional[Tuple[Sequence[str], Sequence[Sequence]]]
            CSV header and rows, written if `--csv` was given.
        mode: Optional[ScalarMode]
            Scalar mode recorded in the manifest.
        """
        if self.args.json_path:
            body = dict(payload)
            body["manifest"] = self.manifest(mode).to_json()
            write_json(self.args.json_path, body, indent=self.settings.indent.value)
        if self.args.csv_path and csv_table is not None:
            write_csv(self.args.csv_path, *csv_table)
