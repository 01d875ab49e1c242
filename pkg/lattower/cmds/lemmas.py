"""Lemmas command"""

from argparse import Namespace

from ..autgroup import brute_force_automorphisms
from ..command import Command, Result, mismatch, ok, to_json
from ..perm_oracle import LEMMA_ORDERS, lemma_lattices
from ..utility import progress


class Lemmas(Command):
    """LatAut of the small groups that appear after the first tower step"""

    name = "lemmas"
    help = "brute-force LatAut of S_n, C_2, C_2^2 and C_2 x S_m"
    needs_spec = False

    def run(self, args: Namespace) -> Result:
        bounds = self.bounds(args)
        rows = []
        lattices = lemma_lattices(bounds["max_order"])
        for name, lattice in progress(lattices.items(), "lemmas", total=len(lattices)):
            count = len(brute_force_automorphisms(lattice, bounds["max_lattice"]))
            rows.append(
                {
                    "group": name,
                    "elements": lattice.size,
                    "brute_force_order": count,
                    "predicted_order": LEMMA_ORDERS[name],
                    "match": count == LEMMA_ORDERS[name],
                }
            )
        if args.format == "json":
            output = to_json(rows)
        else:
            output = "\n".join(
                f"{row['group']}: {row['elements']} elements, "
                f"LatAut {row['brute_force_order']} (predicted {row['predicted_order']})"
                for row in rows
            )
        if not all(row["match"] for row in rows):
            return mismatch("a lemma lattice has an unexpected LatAut order", output)
        return ok(output)
