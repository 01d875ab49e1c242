"""Command registry and dispatch"""

import logging
import sys
from argparse import ArgumentParser
from typing import NoReturn, Sequence, Type

from ..command import Command
from ..config import read_config
from ..data import SPEC_GRAMMAR, ExitCode
from ..utility import set_progress, supress

from .aut import Aut
from .enumerate import Enumerate
from .hasse import Hasse
from .lemmas import Lemmas
from .oracle_diff import OracleDiff
from .settings import Settings
from .tower import Tower

ENTRIES: list[tuple[str, Type[Command]]] = [
    ("enumerate", Enumerate),
    ("aut", Aut),
    ("tower", Tower),
    ("oracle-diff", OracleDiff),
    ("hasse", Hasse),
    ("lemmas", Lemmas),
    ("config", Settings),
]


class CommandParser(ArgumentParser):
    """argparse with usage errors reported on one line"""

    def error(self, message: str) -> NoReturn:
        self.exit(ExitCode.PARSE, f"error: UsageError: {' '.join(message.split())}\n")


def build_parser() -> ArgumentParser:
    """One subparser per registered command, sharing the bound flags"""
    parser = CommandParser(
        prog="lattower",
        description="Normal subgroup lattices of products of symmetric groups and their LatAut towers",
        epilog=SPEC_GRAMMAR,
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, command in ENTRIES:
        sub = commands.add_parser(name, help=command.help, epilog=SPEC_GRAMMAR)
        sub.add_argument("--spec", required=command.needs_spec, help="group literal, e.g. S4^2*S3^2")
        sub.add_argument("--format", choices=command.formats, default=command.formats[0])
        sub.add_argument("--out", help="write output to this file instead of stdout")
        sub.add_argument("--max-order", dest="max_order", type=int, help="oracle group order bound")
        sub.add_argument("--max-T", dest="max_T", type=int, help="enumeration bound on T")
        sub.add_argument("--max-lattice", dest="max_lattice", type=int, help="automorphism search bound")
        sub.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
        command.add_arguments(sub)
    return parser


@supress()
def main(argv: Sequence[str] | None = None) -> ExitCode:
    """Parse, run one command, emit its output"""
    parser = build_parser()
    args = parser.parse_args(argv)
    config = read_config()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config["log_level"],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    set_progress(config["progress"] or args.verbose)
    command = dict(ENTRIES)[args.command](config)
    result = command.run(args)
    command.emit(args, result.additional_info)
    if result.type != ExitCode.OK:
        print(f"error: {result.type.name}: {result.reason}", file=sys.stderr)
    return result.type
