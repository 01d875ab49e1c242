"""Aut command"""

from argparse import Namespace

from ..autgroup import verify_product_formula
from ..command import Command, Result, mismatch, ok, to_json


class Aut(Command):
    """LatAut by brute force against a4! * B!"""

    name = "aut"
    help = "verify |LatAut(G)| = a4! * B! and the tau_sigma realisation"

    def run(self, args: Namespace) -> Result:
        bounds = self.bounds(args)
        report = verify_product_formula(self.spec(args), bounds["max_t"], bounds["max_lattice"])
        if args.format == "json":
            output = to_json(report)
        else:
            output = (
                f"{report['spec']}: predicted {report['predicted_order']}, "
                f"brute force {report['brute_force_order']}, "
                f"constructive {report['constructive_order']} "
                f"({'match' if report['match'] else 'MISMATCH'})\n"
                f"generators: {' '.join(report['generators']) or '-'}"
            )
        if not report["match"]:
            return mismatch(f"LatAut({report['spec']}) disagrees with the product formula", output)
        return ok(output)
