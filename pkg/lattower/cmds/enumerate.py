"""Enumerate command"""

from argparse import Namespace

from ..command import Command, Result, ok, to_json
from ..lattice_core import enumerate_lattice


class Enumerate(Command):
    """Census of N(G), or the full element dump"""

    name = "enumerate"
    help = "enumerate N(G) from admissible triples"

    def run(self, args: Namespace) -> Result:
        lattice = enumerate_lattice(self.spec(args), self.bounds(args)["max_t"])
        if args.format == "json":
            return ok(to_json(lattice.to_json()))
        return ok(str(lattice.census))
