"""The normal subgroup lattice N(G) of a tower group.

Every normal subgroup has two coordinate systems:

* the admissible triple (J, P, H): the coupled slots J, a chain position for
  every slot off J, and the joint sign constraint H <= F_2^J;
* the profile (eff, W): the projection of N to every slot plus the full sign
  image W <= F_2^T.

Triples drive enumeration and serialization, profiles make inclusion, meet
and join plain GF(2) arithmetic. N(J, P, H) has profile
eff = P with Full on J, and W = H (placed on J) + the unit vectors of the
slots off J with P = Full.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from itertools import combinations, product
from math import factorial, prod
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import gf2
from .data import ChainPosition, Family
from .errors import (
    BadCoordinate,
    IllegalChainPosition,
    InvalidProfile,
    MismatchReport,
    NotMixed,
    SpecMismatch,
    TooLarge,
    UnitVectorInH,
    DeadCoordinate,
    WidthMismatch,
)
from .group_spec import TowerGroupSpec, chain, check_position, format_spec, position_order
from .gf2 import Subspace
from .poset import AbstractLattice
from .typings import CensusJSON, ElementJSON, LatticeJSON, TripleJSON

logger = logging.getLogger(__name__)

DEFAULT_MAX_T = 8


class AdmissibleTriple(NamedTuple):
    """(J, P, H); `positions` has one entry per slot and None on J"""
    coupled: tuple[int, ...]
    positions: tuple[ChainPosition | None, ...]
    signs: Subspace


class Profile(NamedTuple):
    """Per-slot projections plus the sign image W <= F_2^T"""
    eff: tuple[ChainPosition, ...]
    signs: Subspace


class LatticeElement(NamedTuple):
    """A normal subgroup in both coordinate systems"""
    spec: TowerGroupSpec
    triple: AdmissibleTriple
    profile: Profile
    family: Family
    order: int


class Census(NamedTuple):
    """Family counts of a lattice"""
    sub_products: int
    sign_parity: int
    mixed: int
    total: int

    def to_json(self) -> CensusJSON:
        """Serialize"""
        return {
            "sub_products": self.sub_products,
            "sign_parity": self.sign_parity,
            "mixed": self.mixed,
            "total": self.total,
        }

    def __str__(self) -> str:
        return (
            f"total {self.total}: sub-products {self.sub_products}, "
            f"sign-parity {self.sign_parity}, mixed {self.mixed}"
        )


def _mask(slots: Iterable[int]) -> int:
    return sum(1 << s for s in slots)


def _slot_label(spec: TowerGroupSpec, index: int) -> str:
    return spec.slots[index].label


def parity_kernel(width: int) -> Subspace:
    """H_I: vectors of even weight (product of signs = +1)"""
    return gf2.annihilator(gf2.span(width, [(1 << width) - 1]))


def validate(
    spec: TowerGroupSpec,
    coupled: Iterable[int],
    positions: Mapping[int, ChainPosition],
    signs: Subspace,
) -> AdmissibleTriple:
    """Check admissibility of (J, P, H) and return the normalized triple"""
    coupled = tuple(sorted(set(coupled)))
    t = spec.t
    for s in coupled:
        if not 0 <= s < t:
            raise BadCoordinate(f"slot {s} outside 0..{t - 1}")
    if signs.width != len(coupled):
        raise WidthMismatch(f"H has width {signs.width} but |J| = {len(coupled)}")
    full: list[ChainPosition | None] = [None] * t
    for s in range(t):
        if s in coupled:
            if s in positions:
                raise IllegalChainPosition(f"coupled slot {_slot_label(spec, s)} has a position")
            continue
        if s not in positions:
            raise IllegalChainPosition(f"slot {_slot_label(spec, s)} has no position")
        full[s] = check_position(spec.slots[s].degree, ChainPosition(positions[s]))
    for j, s in enumerate(coupled):
        if gf2.contains(signs, gf2.unit(len(coupled), j)):
            raise UnitVectorInH(_slot_label(spec, s))
        if not (signs.support >> j) & 1:
            raise DeadCoordinate(_slot_label(spec, s))
    return AdmissibleTriple(coupled, tuple(full), signs)


def triple_to_profile(spec: TowerGroupSpec, triple: AdmissibleTriple) -> Profile:
    """eff = P with Full on J; W = H on J plus free signs of the Full slots off J"""
    eff = tuple(
        ChainPosition.FULL if pos is None else pos for pos in triple.positions
    )
    placed = gf2.embed(triple.signs, triple.coupled, spec.t)
    free = [
        1 << s for s, pos in enumerate(triple.positions) if pos == ChainPosition.FULL
    ]
    return Profile(eff, gf2.span(spec.t, placed.basis + tuple(free)))


def _full_mask(eff: Sequence[ChainPosition]) -> int:
    return _mask(s for s, pos in enumerate(eff) if pos == ChainPosition.FULL)


def check_profile(spec: TowerGroupSpec, profile: Profile) -> Profile:
    """Support and activity conditions"""
    if len(profile.eff) != spec.t or profile.signs.width != spec.t:
        raise WidthMismatch(f"profile does not have width {spec.t}")
    for slot, pos in zip(spec.slots, profile.eff):
        check_position(slot.degree, pos)
    full = _full_mask(profile.eff)
    if profile.signs.support & ~full:
        raise InvalidProfile("W has odd signs at a slot whose projection is even")
    if profile.signs.support != full:
        raise InvalidProfile("a Full slot has no odd element in W")
    return profile


def normalize_profile(
    spec: TowerGroupSpec, eff: Sequence[ChainPosition], signs: Subspace
) -> Profile:
    """Restrict W to the Full slots and demote Full slots W never touches"""
    eff = list(eff)
    while True:
        full = _full_mask(eff)
        allowed = gf2.span(spec.t, [1 << s for s in range(spec.t) if (full >> s) & 1])
        signs = gf2.intersect(signs, allowed)
        dead = [
            s for s in range(spec.t) if (full >> s) & 1 and not (signs.support >> s) & 1
        ]
        if not dead:
            return check_profile(spec, Profile(tuple(eff), signs))
        for s in dead:
            eff[s] = ChainPosition.ALT


def profile_to_triple(spec: TowerGroupSpec, profile: Profile) -> AdmissibleTriple:
    """Canonical triple: J holds the Full slots whose unit vector is not in W"""
    check_profile(spec, profile)
    coupled = tuple(
        s
        for s, pos in enumerate(profile.eff)
        if pos == ChainPosition.FULL and (1 << s) not in profile.signs
    )
    positions = {s: pos for s, pos in enumerate(profile.eff) if s not in coupled}
    return validate(spec, coupled, positions, gf2.project(profile.signs, coupled))


def family_of(triple: AdmissibleTriple) -> Family:
    """Sub-product, sign-parity D_I, or mixed"""
    if not triple.coupled:
        return Family.SUB_PRODUCT
    if triple.signs == parity_kernel(len(triple.coupled)) and all(
        pos in (None, ChainPosition.FULL) for pos in triple.positions
    ):
        return Family.SIGN_PARITY
    return Family.MIXED


def triple_order(spec: TowerGroupSpec, triple: AdmissibleTriple) -> int:
    """|N(J, P, H)| = |H| * prod_J k!/2 * prod_{not J} |P|"""
    size = triple.signs.cardinality
    for slot, pos in zip(spec.slots, triple.positions):
        if pos is None:
            size *= factorial(slot.degree) // 2
        else:
            size *= position_order(slot.degree, pos)
    return size


def order_of(element: LatticeElement) -> int:
    """|N|"""
    return triple_order(element.spec, element.triple)


def make_element(spec: TowerGroupSpec, triple: AdmissibleTriple) -> LatticeElement:
    """Wrap a valid triple with its profile, family and order"""
    return LatticeElement(
        spec,
        triple,
        triple_to_profile(spec, triple),
        family_of(triple),
        triple_order(spec, triple),
    )


def element_from_profile(spec: TowerGroupSpec, profile: Profile) -> LatticeElement:
    """Element from a valid profile"""
    return make_element(spec, profile_to_triple(spec, profile))


def sub_product(spec: TowerGroupSpec, positions: Sequence[ChainPosition]) -> LatticeElement:
    """prod P_s"""
    if len(positions) != spec.t:
        raise WidthMismatch(f"{len(positions)} positions for {spec.t} slots")
    triple = validate(spec, (), dict(enumerate(positions)), Subspace.zero(0))
    return make_element(spec, triple)


def sign_parity(spec: TowerGroupSpec, coupled: Iterable[int]) -> LatticeElement:
    """D_I, the index-2 subgroup with sign product +1 over I"""
    coupled = tuple(sorted(set(coupled)))
    positions = {s: ChainPosition.FULL for s in range(spec.t) if s not in coupled}
    triple = validate(spec, coupled, positions, parity_kernel(len(coupled)))
    return make_element(spec, triple)


def top(spec: TowerGroupSpec) -> LatticeElement:
    """G itself"""
    return sub_product(spec, [ChainPosition.FULL] * spec.t)


def bottom(spec: TowerGroupSpec) -> LatticeElement:
    """The trivial subgroup"""
    return sub_product(spec, [ChainPosition.TRIV] * spec.t)


def contains_element(
    profile: Profile, components: Sequence[ChainPosition], signs: int
) -> bool:
    """Membership of g given the smallest chain position of each g_s and its signs"""
    return all(c <= e for c, e in zip(components, profile.eff)) and signs in profile.signs


def _same_spec(left: LatticeElement, right: LatticeElement) -> TowerGroupSpec:
    if left.spec != right.spec:
        raise SpecMismatch(f"{format_spec(left.spec)} vs {format_spec(right.spec)}")
    return left.spec


def leq_triples(spec: TowerGroupSpec, first: AdmissibleTriple, second: AdmissibleTriple) -> bool:
    """Inclusion through the combined sign patterns of the two triples"""
    eff1 = triple_to_profile(spec, first).eff
    eff2 = triple_to_profile(spec, second).eff
    if any(a > b for a, b in zip(eff1, eff2)):
        return False
    where2 = {s: j for j, s in enumerate(second.coupled)}
    patterns = []
    for row in first.signs.basis:
        pattern = 0
        for j, s in enumerate(first.coupled):
            if (row >> j) & 1 and s in where2:
                pattern |= 1 << where2[s]
        patterns.append(pattern)
    for s in second.coupled:
        if s not in first.coupled and eff1[s] == ChainPosition.FULL:
            patterns.append(1 << where2[s])
    return all(pattern in second.signs for pattern in patterns)


def leq_profiles(first: Profile, second: Profile) -> bool:
    """Componentwise projections and W1 <= W2"""
    return all(a <= b for a, b in zip(first.eff, second.eff)) and gf2.is_subspace(
        first.signs, second.signs
    )


def leq(left: LatticeElement, right: LatticeElement) -> bool:
    """N1 <= N2"""
    _same_spec(left, right)
    return leq_profiles(left.profile, right.profile)


def leq_lemma(left: LatticeElement, right: LatticeElement) -> bool:
    """N1 <= N2 computed from the triples alone"""
    return leq_triples(_same_spec(left, right), left.triple, right.triple)


def meet(left: LatticeElement, right: LatticeElement) -> LatticeElement:
    """N1 & N2"""
    spec = _same_spec(left, right)
    eff = tuple(min(a, b) for a, b in zip(left.profile.eff, right.profile.eff))
    signs = gf2.intersect(left.profile.signs, right.profile.signs)
    return element_from_profile(spec, normalize_profile(spec, eff, signs))


def join(left: LatticeElement, right: LatticeElement) -> LatticeElement:
    """N1 N2"""
    spec = _same_spec(left, right)
    eff = tuple(max(a, b) for a, b in zip(left.profile.eff, right.profile.eff))
    signs = gf2.subspace_sum(left.profile.signs, right.profile.signs)
    return element_from_profile(spec, Profile(eff, signs))


def decompose_mixed(
    element: LatticeElement,
) -> tuple[LatticeElement, list[tuple[int, ...]]]:
    """N = S_P & D_{I_1} & ... & D_{I_l} with one I per basis vector of H's annihilator"""
    if element.family != Family.MIXED:
        raise NotMixed(f"element is {element.family.name}")
    spec = element.spec
    outer = sub_product(spec, element.profile.eff)
    coupled = element.triple.coupled
    parts = [
        tuple(coupled[j] for j in range(len(coupled)) if (functional >> j) & 1)
        for functional in gf2.annihilator(element.triple.signs).basis
    ]
    rebuilt = reduce(meet, (sign_parity(spec, part) for part in parts), outer)
    if rebuilt != element:
        raise MismatchReport("meet of the decomposition does not reproduce the element")
    return outer, parts


@lru_cache(maxsize=None)
def admissible_subspaces(width: int) -> tuple[Subspace, ...]:
    """Every H <= F_2^width satisfying both admissibility conditions"""
    everywhere = (1 << width) - 1
    return tuple(
        space
        for space in gf2.enumerate_subspaces(width)
        if space.support == everywhere
        and not any((1 << j) in space for j in range(width))
    )


def expected_census(spec: TowerGroupSpec) -> tuple[int, int]:
    """Closed-form sub-product and sign-parity counts"""
    subs = prod(len(chain(degree)) ** count for degree, count in spec.exponents)
    return subs, max(0, 2 ** spec.t - spec.t - 1)


def triple_to_json(triple: AdmissibleTriple) -> TripleJSON:
    """Serialize with slot indices as ids"""
    return {
        "J": list(triple.coupled),
        "P": {str(s): pos.short for s, pos in enumerate(triple.positions) if pos is not None},
        "H": triple.signs.to_json(),
    }


def triple_from_json(spec: TowerGroupSpec, data: TripleJSON) -> AdmissibleTriple:
    """Inverse of triple_to_json, with validation"""
    positions = {int(s): ChainPosition.from_short(pos) for s, pos in data["P"].items()}
    return validate(spec, data["J"], positions, gf2.from_json(len(data["J"]), data["H"]))


@dataclass(frozen=True)
class NormalLattice:
    """All of N(G), in enumeration order"""

    spec: TowerGroupSpec
    elements: tuple[LatticeElement, ...]

    @cached_property
    def _index(self) -> dict[AdmissibleTriple, int]:
        return {element.triple: i for i, element in enumerate(self.elements)}

    def index(self, item: LatticeElement | AdmissibleTriple) -> int:
        """Position of an element (or its triple)"""
        triple = item.triple if isinstance(item, LatticeElement) else item
        return self._index[triple]

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def census(self) -> Census:
        """Family counts"""
        counts = [0, 0, 0]
        for element in self.elements:
            counts[element.family] += 1
        return Census(counts[0], counts[1], counts[2], len(self.elements))

    @cached_property
    def abstract(self) -> AbstractLattice:
        """The bare order, labelled 'family:order'"""
        below = []
        annihilators = [gf2.annihilator(e.profile.signs).basis for e in self.elements]
        effs = [e.profile.eff for e in self.elements]
        rows = [e.profile.signs.basis for e in self.elements]
        for i in range(len(self.elements)):
            bits = 0
            for j in range(len(self.elements)):
                if all(a <= b for a, b in zip(effs[j], effs[i])) and all(
                    gf2.dot(row, functional) == 0
                    for row in rows[j]
                    for functional in annihilators[i]
                ):
                    bits |= 1 << j
            below.append(bits)
        labels = tuple(f"{e.family.short}:{e.order}" for e in self.elements)
        return AbstractLattice(format_spec(self.spec), labels, tuple(below))

    def to_json(self) -> LatticeJSON:
        """Elements, census and covering pairs"""
        elements: list[ElementJSON] = [
            {
                "triple": triple_to_json(e.triple),
                "family": e.family.short,
                "order": e.order,
                "sign_patterns": [
                    list(gf2.to_signs(gf2.SignVector(e.triple.signs.width, v)))
                    for v in sorted(e.triple.signs.elements())
                ],
            }
            for e in self.elements
        ]
        return {
            "spec": format_spec(self.spec),
            "elements": elements,
            "census": self.census.to_json(),
            "hasse": [tuple(edge) for edge in self.abstract.hasse_edges],
        }


def enumerate_lattice(spec: TowerGroupSpec, max_t: int = DEFAULT_MAX_T) -> NormalLattice:
    """Every admissible triple exactly once"""
    if spec.t > max_t:
        raise TooLarge(f"T = {spec.t} exceeds max_t {max_t}")
    elements = []
    slots = range(spec.t)
    for size in range(spec.t + 1):
        for coupled in combinations(slots, size):
            free = [s for s in slots if s not in coupled]
            choices = [chain(spec.slots[s].degree) for s in free]
            for signs in admissible_subspaces(size):
                for picks in product(*choices):
                    positions: list[ChainPosition | None] = [None] * spec.t
                    for s, pos in zip(free, picks):
                        positions[s] = pos
                    triple = AdmissibleTriple(coupled, tuple(positions), signs)
                    elements.append(make_element(spec, triple))
    lattice = NormalLattice(spec, tuple(elements))
    logger.info("N(%s): %s", format_spec(spec), lattice.census)
    return lattice
