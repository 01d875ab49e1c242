"""Tower command"""

from argparse import ArgumentParser, Namespace

from ..command import Command, Result, mismatch, ok, to_json
from ..tower import TowerNode, describe, format_run, run_tower, verify_step_against_lattice


class Tower(Command):
    """Iterate LatAut until the trivial group"""

    name = "tower"
    help = "run the LatAut tower G_0 -> G_1 -> ..."

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        parser.add_argument(
            "--check",
            action="store_true",
            help="cross-check every step with a brute-force automorphism count",
        )

    def run(self, args: Namespace) -> Result:
        bounds = self.bounds(args)
        run = run_tower(TowerNode.start(self.spec(args)), bounds["max_tower_steps"])
        reports = []
        if args.check:
            reports = [
                verify_step_against_lattice(
                    node, bounds["max_t"], bounds["max_order"], bounds["max_lattice"]
                )
                for node in run.nodes[:-1]
            ]
        if args.format == "json":
            output = to_json(
                {
                    "nodes": [describe(node) for node in run.nodes],
                    "length": run.length,
                    "sharp": run.sharp,
                    "checks": reports,
                }
            )
        else:
            lines = [format_run(run)]
            for report in reports:
                found = report["brute_force_order"]
                lines.append(
                    f"  LatAut({report['node']}) = {report['predicted']}: "
                    f"predicted {report['predicted_order']}, "
                    f"brute force {'skipped' if found is None else found}"
                )
            output = "\n".join(lines)
        if any(report["match"] is False for report in reports):
            return mismatch("a tower step disagrees with brute force", output)
        return ok(output)
