"""Hasse command"""

from argparse import Namespace

from ..command import Command, Result, ok
from ..errors import DegreeTooSmall, SpecParseError
from ..lattice_core import enumerate_lattice
from ..perm_oracle import LEMMA_GROUPS, concrete_lattice, make_group
from ..render import as_dot


class Hasse(Command):
    """DOT output of the covering relation"""

    name = "hasse"
    help = "emit the Hasse diagram of N(G) (spec literal or lemma group such as C2^2)"
    formats = ("dot",)

    def run(self, args: Namespace) -> Result:
        bounds = self.bounds(args)
        try:
            spec = self.spec(args)
        except (SpecParseError, DegreeTooSmall):
            if args.spec not in LEMMA_GROUPS:
                raise
            group = make_group(LEMMA_GROUPS[args.spec], bounds["max_order"])
            return ok(as_dot(concrete_lattice(group, args.spec, bounds["max_order"])[1]))
        return ok(as_dot(enumerate_lattice(spec, bounds["max_t"]).abstract))
