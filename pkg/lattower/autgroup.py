"""LatAut(G): constructive slot permutations against brute-force search.

The constructive side lets a class-preserving slot permutation act on
admissible triples. The brute-force side only sees the abstract order of
the lattice (covers, heights, degrees) and never looks at triples, so the
two sides can be compared without one assuming the other.
"""

from __future__ import annotations

import logging
from itertools import permutations
from math import factorial
from typing import Iterator, NamedTuple

import networkx as nx

from . import gf2
from .data import ChainPosition, SlotClass
from .errors import ClassViolation, MismatchReport, TooLarge
from .group_spec import TowerGroupSpec, chain_iso, format_spec
from .lattice_core import (
    DEFAULT_MAX_T,
    LatticeElement,
    NormalLattice,
    enumerate_lattice,
    make_element,
    validate,
)
from .poset import AbstractLattice
from .typings import AutReport
from .utility import cycle_notation, iter_bits

logger = logging.getLogger(__name__)

DEFAULT_MAX_LATTICE = 2000


class SlotPermutation(NamedTuple):
    """sigma: slot s goes to mapping[s]"""
    mapping: tuple[int, ...]

    @classmethod
    def identity(cls, t: int) -> SlotPermutation:
        """The identity on t slots"""
        return cls(tuple(range(t)))

    def compose(self, other: SlotPermutation) -> SlotPermutation:
        """self after other"""
        return SlotPermutation(tuple(self.mapping[s] for s in other.mapping))

    def inverse(self) -> SlotPermutation:
        """sigma^-1"""
        inverse = [0] * len(self.mapping)
        for s, image in enumerate(self.mapping):
            inverse[image] = s
        return SlotPermutation(tuple(inverse))

    def __str__(self) -> str:
        return cycle_notation(self.mapping)


class LatticeAutomorphism(NamedTuple):
    """phi: element i goes to mapping[i]"""
    mapping: tuple[int, ...]

    def compose(self, other: LatticeAutomorphism) -> LatticeAutomorphism:
        """self after other"""
        return LatticeAutomorphism(tuple(self.mapping[i] for i in other.mapping))

    def inverse(self) -> LatticeAutomorphism:
        """phi^-1"""
        inverse = [0] * len(self.mapping)
        for i, image in enumerate(self.mapping):
            inverse[image] = i
        return LatticeAutomorphism(tuple(inverse))


def check_class_preserving(spec: TowerGroupSpec, sigma: SlotPermutation) -> SlotPermutation:
    """Raise unless sigma is a permutation mapping A-slots to A-slots"""
    if sorted(sigma.mapping) != list(range(spec.t)):
        raise ClassViolation(f"{sigma.mapping} is not a permutation of {spec.t} slots")
    for slot in spec.slots:
        if spec.slots[sigma.mapping[slot.index]].cls != slot.cls:
            raise ClassViolation(
                f"{sigma} sends {slot.label} to {spec.slots[sigma.mapping[slot.index]].label}"
            )
    return sigma


def class_preserving_permutations(spec: TowerGroupSpec) -> Iterator[SlotPermutation]:
    """Sym(A) x Sym(B)"""
    a_slots, b_slots = spec.slot_ids(SlotClass.A), spec.slot_ids(SlotClass.B)
    for a_images in permutations(a_slots):
        for b_images in permutations(b_slots):
            mapping = list(range(spec.t))
            for source, image in zip(a_slots + b_slots, a_images + b_images):
                mapping[source] = image
            yield SlotPermutation(tuple(mapping))


def generators(spec: TowerGroupSpec) -> list[SlotPermutation]:
    """Adjacent transpositions inside each class"""
    gens = []
    for cls in SlotClass:
        ids = spec.slot_ids(cls)
        for left, right in zip(ids, ids[1:]):
            mapping = list(range(spec.t))
            mapping[left], mapping[right] = right, left
            gens.append(SlotPermutation(tuple(mapping)))
    return gens


def tau_sigma(sigma: SlotPermutation, element: LatticeElement) -> LatticeElement:
    """N(J, P, H) -> N(sigma J, psi(P), relabelled H)"""
    spec = element.spec
    check_class_preserving(spec, sigma)
    triple = element.triple
    move = sigma.mapping
    coupled = sorted(move[s] for s in triple.coupled)
    positions: dict[int, ChainPosition] = {}
    for s, pos in enumerate(triple.positions):
        if pos is not None:
            psi = chain_iso(spec.slots[s].degree, spec.slots[move[s]].degree)
            positions[move[s]] = psi[pos]
    relabel = [coupled.index(move[s]) for s in triple.coupled]
    signs = gf2.permute(triple.signs, relabel)
    return make_element(spec, validate(spec, coupled, positions, signs))


def tau_as_automorphism(sigma: SlotPermutation, lattice: NormalLattice) -> LatticeAutomorphism:
    """tau_sigma on element indices, through the triple index"""
    return LatticeAutomorphism(
        tuple(lattice.index(tau_sigma(sigma, element)) for element in lattice.elements)
    )


def complemented_elements(lattice: AbstractLattice) -> set[int]:
    """N with some C such that N & C = bottom and N | C = top"""
    bottom, top = lattice.bottom, lattice.top
    return {
        n
        for n in range(lattice.size)
        if any(
            lattice.meet(n, c) == bottom and lattice.join(n, c) == top
            for c in range(lattice.size)
        )
    }


def factor_atoms(lattice: AbstractLattice) -> list[int]:
    """Nontrivial complemented elements with no complemented element strictly below"""
    complemented = complemented_elements(lattice)
    bottom = lattice.bottom
    return sorted(
        n
        for n in complemented
        if n != bottom
        and not any(m not in (bottom, n) and lattice.leq(m, n) for m in complemented)
    )


def slot_atoms(lattice: NormalLattice) -> list[int]:
    """factor_atoms listed by slot: entry s is the element S_k^{(k,i)} of slot s"""
    by_slot: dict[int, int] = {}
    for index in factor_atoms(lattice.abstract):
        triple = lattice.elements[index].triple
        full = [s for s, pos in enumerate(triple.positions) if pos == ChainPosition.FULL]
        others = [pos for pos in triple.positions if pos != ChainPosition.FULL]
        if triple.coupled or len(full) != 1 or any(pos != ChainPosition.TRIV for pos in others):
            raise MismatchReport(f"factor atom {index} is not a single factor")
        by_slot[full[0]] = index
    if sorted(by_slot) != list(range(lattice.spec.t)):
        raise MismatchReport(f"factor atoms cover slots {sorted(by_slot)}")
    return [by_slot[s] for s in range(lattice.spec.t)]


def _color_classes(lattice: AbstractLattice) -> list[int]:
    """Weisfeiler-Lehman colouring of the Hasse digraph, seeded with order invariants"""
    hasse = nx.DiGraph(lattice.hasse)
    for i in range(lattice.size):
        hasse.nodes[i]["seed"] = (
            f"{lattice.height[i]}:{lattice.depth[i]}:"
            f"{lattice.below[i].bit_count()}:{lattice.above[i].bit_count()}"
        )
    rounds = max(lattice.height, default=0) + 1
    upward = nx.weisfeiler_lehman_subgraph_hashes(hasse, node_attr="seed", iterations=rounds)
    downward = nx.weisfeiler_lehman_subgraph_hashes(
        hasse.reverse(), node_attr="seed", iterations=rounds
    )
    signature = [
        (hasse.nodes[i]["seed"], upward[i][-1], downward[i][-1]) for i in range(lattice.size)
    ]
    palette = {sig: n for n, sig in enumerate(sorted(set(signature)))}
    return [palette[sig] for sig in signature]


def _search_order(lattice: AbstractLattice, colors: list[int]) -> list[int]:
    """Smallest colour class first, then always a Hasse neighbour of what is placed"""
    class_size: dict[int, int] = {}
    for color in colors:
        class_size[color] = class_size.get(color, 0) + 1
    rank = {i: (class_size[colors[i]], colors[i], i) for i in range(lattice.size)}
    order = [min(range(lattice.size), key=rank.__getitem__)]
    placed = {order[0]}
    frontier: set[int] = set()
    while len(order) < lattice.size:
        last = order[-1]
        frontier.update(lattice.lower_covers[last] + lattice.upper_covers[last])
        frontier -= placed
        pool = frontier or set(range(lattice.size)) - placed
        nxt = min(pool, key=rank.__getitem__)
        order.append(nxt)
        placed.add(nxt)
    return order


def brute_force_automorphisms(
    lattice: AbstractLattice, max_size: int = DEFAULT_MAX_LATTICE
) -> list[LatticeAutomorphism]:
    """Every order automorphism of the lattice, by backtracking"""
    if lattice.size > max_size:
        raise TooLarge(f"{lattice.name} has {lattice.size} elements, max_lattice is {max_size}")
    colors = _color_classes(lattice)
    order = _search_order(lattice, colors)
    members: dict[int, list[int]] = {}
    for i, color in enumerate(colors):
        members.setdefault(color, []).append(i)
    image = [-1] * lattice.size
    used = [False] * lattice.size
    found: list[LatticeAutomorphism] = []

    def candidates(x: int) -> list[int]:
        pool = members[colors[x]]
        for y in lattice.lower_covers[x]:
            if image[y] >= 0:
                return [c for c in lattice.upper_covers[image[y]] if c in pool]
        for y in lattice.upper_covers[x]:
            if image[y] >= 0:
                return [c for c in lattice.lower_covers[image[y]] if c in pool]
        return pool

    def consistent(depth: int, x: int, c: int) -> bool:
        for y in order[:depth]:
            mapped = image[y]
            if lattice.leq(y, x) != lattice.leq(mapped, c):
                return False
            if lattice.leq(x, y) != lattice.leq(c, mapped):
                return False
        return True

    def extend(depth: int):
        if depth == len(order):
            found.append(LatticeAutomorphism(tuple(image)))
            return
        x = order[depth]
        for c in candidates(x):
            if used[c] or not consistent(depth, x, c):
                continue
            image[x], used[c] = c, True
            extend(depth + 1)
            image[x], used[c] = -1, False

    extend(0)
    logger.info("%s: %d automorphisms", lattice.name, len(found))
    return sorted(found)


def is_group(autos: list[LatticeAutomorphism]) -> bool:
    """Closure under composition and inverses, identity included"""
    pool = set(autos)
    if not pool:
        return False
    size = len(next(iter(pool)).mapping)
    if LatticeAutomorphism(tuple(range(size))) not in pool:
        return False
    return all(f.inverse() in pool for f in pool) and all(
        f.compose(g) in pool for f in pool for g in pool
    )


def is_automorphism(lattice: AbstractLattice, phi: LatticeAutomorphism) -> bool:
    """Bijective and order-preserving in both directions"""
    if sorted(phi.mapping) != list(range(lattice.size)):
        return False
    for i in range(lattice.size):
        mapped = 0
        for j in iter_bits(lattice.below[i]):
            mapped |= 1 << phi.mapping[j]
        if mapped != lattice.below[phi.mapping[i]]:
            return False
    return True


def induced_permutation(
    phi: LatticeAutomorphism, lattice: NormalLattice, atoms: list[int] | None = None
) -> SlotPermutation:
    """The permutation of the individual factors induced by phi"""
    atoms = atoms or slot_atoms(lattice)
    slot_of = {index: s for s, index in enumerate(atoms)}
    try:
        mapping = tuple(slot_of[phi.mapping[index]] for index in atoms)
    except KeyError as exc:
        raise MismatchReport("automorphism does not permute the factor atoms") from exc
    return check_class_preserving(lattice.spec, SlotPermutation(mapping))


def predicted_order(spec: TowerGroupSpec) -> int:
    """|S_{a4} x S_B|"""
    return factorial(spec.a4) * factorial(spec.b)


def verify_product_formula(
    spec: TowerGroupSpec,
    max_t: int = DEFAULT_MAX_T,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> AutReport:
    """Brute-force LatAut against the tau_sigma realisation of Sym(A) x Sym(B)"""
    lattice = enumerate_lattice(spec, max_t)
    autos = brute_force_automorphisms(lattice.abstract, max_lattice)
    pool = set(autos)
    constructive: set[LatticeAutomorphism] = set()
    atoms = slot_atoms(lattice)
    realised = True
    for sigma in class_preserving_permutations(spec):
        tau = tau_as_automorphism(sigma, lattice)
        if tau not in pool or induced_permutation(tau, lattice, atoms) != sigma:
            logger.warning("%s: tau_%s is not realised", format_spec(spec), sigma)
            realised = False
        constructive.add(tau)
    expected = predicted_order(spec)
    match = realised and len(autos) == expected == len(constructive) and constructive == pool
    if not match:
        logger.warning(
            "%s: predicted %d, brute force %d, constructive %d",
            format_spec(spec), expected, len(autos), len(constructive),
        )
    return {
        "spec": format_spec(spec),
        "predicted_order": expected,
        "brute_force_order": len(autos),
        "constructive_order": len(constructive),
        "match": match,
        "generators": [str(sigma) for sigma in generators(spec)],
    }
