"""Oracle-diff command"""

from argparse import Namespace

from ..command import Command, Result, ok, to_json
from ..perm_oracle import differential_validate


class OracleDiff(Command):
    """Triples against concrete normal subgroups"""

    name = "oracle-diff"
    help = "compare the triple lattice with a permutation-group computation"

    def run(self, args: Namespace) -> Result:
        bounds = self.bounds(args)
        report = differential_validate(self.spec(args), bounds["max_order"], bounds["max_t"])
        if args.format == "json":
            return ok(to_json(report))
        return ok(
            f"{report['spec']}: oracle {report['oracle_count']}, "
            f"lattice {report['lattice_count']}, {report['pairs_checked']} pairs agree"
        )
