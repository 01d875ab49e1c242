"""Command base class module"""
# pylint: disable=unused-argument

import json
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Any

from .config import check_bounds
from .data import ExitCode, ReturnInfo
from .group_spec import TowerGroupSpec, parse_spec
from .typings import Bounds, Config

Result = ReturnInfo[str]


def ok(output: str) -> Result:
    """Successful run"""
    return ReturnInfo(ExitCode.OK, "", output)


def mismatch(reason: str, output: str) -> Result:
    """A verification ran to completion and disagreed"""
    return ReturnInfo(ExitCode.MISMATCH, reason, output)


def to_json(data: Any) -> str:
    """Stable JSON rendering"""
    return json.dumps(data, indent=2, ensure_ascii=False)


class Command:
    """Base class for all commands"""

    name: str = ""
    help: str = ""
    formats: tuple[str, ...] = ("text", "json")
    needs_spec: bool = True

    def __init__(self, config: Config) -> None:
        self.config = config

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        """Command-specific flags"""
        return None

    def run(self, args: Namespace) -> Result:
        """Do the work and return the text to emit"""
        raise NotImplementedError

    def bounds(self, args: Namespace) -> Bounds:
        """Config bounds with the command-line overrides applied"""
        bounds = dict(self.config["bounds"])
        for key, flag in (
            ("max_order", "max_order"),
            ("max_t", "max_T"),
            ("max_lattice", "max_lattice"),
        ):
            value = getattr(args, flag, None)
            if value is not None:
                bounds[key] = value
        check_bounds(bounds)  # type: ignore[arg-type]
        return bounds  # type: ignore[return-value]

    def spec(self, args: Namespace) -> TowerGroupSpec:
        """The parsed --spec literal"""
        return parse_spec(args.spec, self.bounds(args)["max_degree"])

    def emit(self, args: Namespace, output: str):
        """Write to --out, or stdout"""
        if not output.endswith("\n"):
            output += "\n"
        if args.out:
            Path(args.out).write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
