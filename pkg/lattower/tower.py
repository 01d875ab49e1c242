"""The LatAut tower G_0 -> G_1 -> G_2 -> G_3.

After the first step every group in the tower is S_a x S_b (with S_0 = S_1 = 1
and S_2 = C_2), so a node is either the starting spec or such a pair.
"""

from __future__ import annotations

import logging
from math import factorial
from typing import Iterable, NamedTuple

from .autgroup import DEFAULT_MAX_LATTICE, brute_force_automorphisms
from .errors import NonTermination, TooLarge
from .group_spec import TowerGroupSpec, all_specs, format_spec, make_spec, order
from .lattice_core import DEFAULT_MAX_T, enumerate_lattice
from .perm_oracle import DEFAULT_MAX_ORDER, concrete_lattice, make_group
from .poset import AbstractLattice
from .typings import StepReport
from .utility import progress

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10
SHARP_LENGTH = 3


class TowerNode(NamedTuple):
    """Start(spec) when spec is set, Pair(a, b) = S_a x S_b otherwise"""
    spec: TowerGroupSpec | None
    a: int = 0
    b: int = 0

    @classmethod
    def start(cls, spec: TowerGroupSpec) -> TowerNode:
        """G_0"""
        return cls(spec)

    @classmethod
    def pair(cls, a: int, b: int) -> TowerNode:
        """S_a x S_b, a carrying the S_4-derived count"""
        if a < 0 or b < 0:
            raise ValueError(f"Pair({a}, {b}) has a negative coordinate")
        return cls(None, a, b)

    @property
    def is_start(self) -> bool:
        return self.spec is not None

    @property
    def canonical(self) -> tuple[int, int]:
        """Provenance-free isomorphism type: sorted degrees with 1 folded into 0"""
        low, high = sorted(0 if x <= 1 else x for x in (self.a, self.b))
        return low, high

    @property
    def trivial(self) -> bool:
        if self.spec is not None:
            return self.spec.t == 0
        return self.canonical == (0, 0)

    def __str__(self) -> str:
        return describe(self)


class TowerRun(NamedTuple):
    """Nodes from G_0 up to the first trivial one"""
    nodes: tuple[TowerNode, ...]

    @property
    def length(self) -> int:
        """Number of steps"""
        return len(self.nodes) - 1

    @property
    def sharp(self) -> bool:
        """G_2 is nontrivial, so G_3 = 1 cannot be improved"""
        return self.length == SHARP_LENGTH


def _pair_spec(low: int, high: int) -> TowerGroupSpec:
    degrees = [x for x in (low, high) if x >= 3]
    return make_spec({d: degrees.count(d) for d in set(degrees)})


def describe(node: TowerNode) -> str:
    """'S4^2*S3^2', 'C2^2', 'C2*S3', 'S3' or '1'"""
    if node.spec is not None:
        return format_spec(node.spec)
    low, high = node.canonical
    if low == 2:
        return "C2^2" if high == 2 else f"C2*S{high}"
    if high == 2:
        return "C2"
    return format_spec(_pair_spec(low, high))


def group_order(node: TowerNode) -> int:
    """|S_a x S_b|, or |G| for a start node"""
    if node.spec is not None:
        return order(node.spec)
    return factorial(node.a) * factorial(node.b)


def latauto_step(node: TowerNode) -> TowerNode:
    """LatAut of the node's group, as a pair"""
    if node.spec is not None:
        return TowerNode.pair(node.spec.a4, node.spec.b)
    low, high = node.canonical
    if low == 0:
        # 1, C_2 and S_n: N is a chain
        return TowerNode.pair(0, 0)
    if low == 2 and high == 2:
        return TowerNode.pair(0, 3)
    if low == 2:
        return TowerNode.pair(0, 2)
    a4 = int(low == 4) + int(high == 4)
    return TowerNode.pair(a4, 2 - a4)


def run_tower(g0: TowerNode, max_steps: int = DEFAULT_MAX_STEPS) -> TowerRun:
    """Iterate latauto_step until the trivial group"""
    nodes = [g0]
    while not nodes[-1].trivial:
        if len(nodes) > max_steps:
            raise NonTermination(
                f"tower from {describe(g0)} still nontrivial after {max_steps} steps"
            )
        nodes.append(latauto_step(nodes[-1]))
    run = TowerRun(tuple(nodes))
    if g0.is_start and run.length > SHARP_LENGTH:
        raise NonTermination(f"tower from {describe(g0)} took {run.length} steps")
    logger.debug("%s", format_run(run))
    return run


def format_run(run: TowerRun) -> str:
    """G_0 = ... -> G_1 = ... (n steps[, sharp])"""
    chain = " → ".join(f"G_{i} = {describe(node)}" for i, node in enumerate(run.nodes))
    steps = "1 step" if run.length == 1 else f"{run.length} steps"
    return f"{chain} ({steps}{', sharp' if run.sharp else ''})"


def sweep(max_t: int, degrees: Iterable[int]) -> TowerRun:
    """Run every spec with T <= max_t over degrees, return the longest run"""
    specs = list(all_specs(max_t, tuple(degrees)))
    longest: TowerRun | None = None
    for spec in progress(specs, "tower sweep"):
        run = run_tower(TowerNode.start(spec))
        if longest is None or run.length > longest.length:
            longest = run
    assert longest is not None
    logger.info("%d specs, longest tower: %s", len(specs), format_run(longest))
    return longest


def node_lattice(
    node: TowerNode,
    max_t: int = DEFAULT_MAX_T,
    max_order: int = DEFAULT_MAX_ORDER,
) -> AbstractLattice:
    """N of the node's group, from triples for tower groups and concretely otherwise"""
    if node.spec is not None:
        return enumerate_lattice(node.spec, max_t).abstract
    low, high = node.canonical
    if low == 2 or high == 2:
        degrees = tuple(x for x in (low, high) if x >= 2)
        return concrete_lattice(make_group(degrees, max_order), describe(node), max_order)[1]
    return enumerate_lattice(_pair_spec(low, high), max_t).abstract


def verify_step_against_lattice(
    node: TowerNode,
    max_t: int = DEFAULT_MAX_T,
    max_order: int = DEFAULT_MAX_ORDER,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> StepReport:
    """Compare latauto_step with a brute-force count on the node's lattice"""
    predicted = latauto_step(node)
    report: StepReport = {
        "node": describe(node),
        "predicted": describe(predicted),
        "predicted_order": group_order(predicted),
        "brute_force_order": None,
        "match": None,
    }
    try:
        lattice = node_lattice(node, max_t, max_order)
        count = len(brute_force_automorphisms(lattice, max_lattice))
    except TooLarge as exc:
        logger.warning("skipping %s: %s", describe(node), exc)
        return report
    report["brute_force_order"] = count
    report["match"] = count == report["predicted_order"]
    return report
