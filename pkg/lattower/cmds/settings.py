"""Settings command"""

from argparse import ArgumentParser, Namespace

from yaml import dump

from ..command import Command, Result, ok
from ..config import config_path, write_config
from ..typings import Config


class Settings(Command):
    """Show the effective configuration, optionally saving it"""

    name = "config"
    help = "print the effective configuration as YAML (bound flags applied)"
    formats = ("yaml",)
    needs_spec = False

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        parser.add_argument(
            "--save", action="store_true", help="write the effective configuration to the config file"
        )

    def run(self, args: Namespace) -> Result:
        config: Config = {**self.config, "bounds": self.bounds(args)}
        output = dump(config, sort_keys=True)
        if args.save:
            write_config(config)
            output = f"# saved to {config_path()}\n{output}"
        return ok(output)
