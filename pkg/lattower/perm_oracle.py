"""Ground truth from concrete permutation groups.

Groups are direct products of symmetric groups (degree 2 allowed here for
C_2). Every element is an integer id, the mixed-radix rank of its tuple of
per-factor permutation ranks; subgroups are int bitsets over those ids.
Conjugacy classes, normal closures and normality come from sympy, acting on
the disjoint union of the factors' points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, NamedTuple, Sequence

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup

from . import gf2
from .data import ChainPosition
from .errors import MismatchReport, NotTowerGroup, TooLarge
from .group_spec import TowerGroupSpec, format_spec, make_spec
from .lattice_core import (
    DEFAULT_MAX_T,
    Profile,
    check_profile,
    element_from_profile,
    enumerate_lattice,
    join,
    leq,
    meet,
)
from .poset import AbstractLattice
from .typings import OracleReport
from .utility import iter_bits, progress

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 5000

Perm = tuple[int, ...]


def chain_position(perm: Permutation) -> ChainPosition:
    """Smallest member of the chain N(S_n) containing perm"""
    if perm.is_Identity:
        return ChainPosition.TRIV
    if perm.is_odd:
        return ChainPosition.FULL
    if perm.size == 4 and perm.order() == 2:
        return ChainPosition.V
    return ChainPosition.ALT


class SymmetricTable(NamedTuple):
    """Multiplication data for S_n with permutations ranked lexicographically"""
    perms: tuple[Perm, ...]
    rank: dict[Perm, int]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    odd: tuple[int, ...]
    position: tuple[ChainPosition, ...]


@lru_cache(maxsize=None)
def symmetric_table(degree: int) -> SymmetricTable:
    """Tables for S_degree, built once per degree"""
    members = sorted(SymmetricGroup(degree).elements, key=lambda p: p.array_form)
    perms = tuple(tuple(p.array_form) for p in members)
    rank = {perm: r for r, perm in enumerate(perms)}
    # sympy's p * q applies p first; mult[a][b] applies b first
    return SymmetricTable(
        perms,
        rank,
        tuple(tuple(rank[tuple((q * p).array_form)] for q in members) for p in members),
        tuple(rank[tuple((~p).array_form)] for p in members),
        tuple(int(p.is_odd) for p in members),
        tuple(chain_position(p) for p in members),
    )


@dataclass(frozen=True)
class ConcreteGroup:
    """prod S_d over `degrees`, elements addressed by id"""

    degrees: tuple[int, ...]
    _right: dict[int, tuple[int, ...]] = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    @cached_property
    def tables(self) -> tuple[SymmetricTable, ...]:
        """One table per factor"""
        return tuple(symmetric_table(degree) for degree in self.degrees)

    @cached_property
    def radices(self) -> tuple[int, ...]:
        """d! per factor"""
        return tuple(factorial(degree) for degree in self.degrees)

    @property
    def order(self) -> int:
        """|G|"""
        return prod(self.radices)

    @property
    def identity(self) -> int:
        """Id of the identity"""
        return 0

    def decode(self, element: int) -> tuple[int, ...]:
        """Per-factor permutation ranks"""
        ranks = []
        for radix in reversed(self.radices):
            element, rank = divmod(element, radix)
            ranks.append(rank)
        return tuple(reversed(ranks))

    def encode(self, ranks: Sequence[int]) -> int:
        """Inverse of decode"""
        element = 0
        for rank, radix in zip(ranks, self.radices):
            element = element * radix + rank
        return element

    def element(self, element: int) -> tuple[Perm, ...]:
        """The element as a tuple of permutations"""
        return tuple(
            table.perms[rank] for table, rank in zip(self.tables, self.decode(element))
        )

    def multiply(self, left: int, right: int) -> int:
        """left * right (right acts first)"""
        return self.encode(
            [
                table.mult[a][b]
                for table, a, b in zip(self.tables, self.decode(left), self.decode(right))
            ]
        )

    def inverse(self, element: int) -> int:
        """element^-1"""
        return self.encode(
            [table.inverse[a] for table, a in zip(self.tables, self.decode(element))]
        )

    def conjugate(self, element: int, by: int) -> int:
        """by^-1 element by"""
        return self.multiply(self.inverse(by), self.multiply(element, by))

    def right_table(self, generator: int) -> tuple[int, ...]:
        """x -> x * generator for every id, cached per generator"""
        if generator not in self._right:
            self._right[generator] = tuple(
                self.multiply(x, generator) for x in range(self.order)
            )
        return self._right[generator]

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A transposition and a full cycle inside every factor"""
        gens = []
        for j, degree in enumerate(self.degrees):
            if degree < 2:
                continue
            swap = (1, 0) + tuple(range(2, degree))
            cycle = tuple(range(1, degree)) + (0,)
            for perm in dict.fromkeys((swap, cycle)):
                ranks = [0] * len(self.degrees)
                ranks[j] = self.tables[j].rank[perm]
                gens.append(self.encode(ranks))
        return tuple(gens)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """First point of every factor in the disjoint union"""
        starts = [0]
        for degree in self.degrees:
            starts.append(starts[-1] + degree)
        return tuple(starts)

    def to_permutation(self, element: int) -> Permutation:
        """The element acting on all sum(degrees) points"""
        images: list[int] = []
        for offset, perm in zip(self.offsets, self.element(element)):
            images.extend(offset + image for image in perm)
        return Permutation(images, size=self.offsets[-1])

    def from_permutation(self, perm: Permutation) -> int:
        """Inverse of to_permutation"""
        array = perm.array_form + list(range(perm.size, self.offsets[-1]))
        return self.encode(
            [
                table.rank[tuple(x - start for x in array[start:start + degree])]
                for table, start, degree in zip(self.tables, self.offsets, self.degrees)
            ]
        )

    @cached_property
    def permutation_group(self) -> PermutationGroup:
        """G as a sympy permutation group"""
        return PermutationGroup([self.to_permutation(g) for g in self.generators])

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Sign vector (bit s = factor s odd) of every id"""
        return tuple(
            sum(table.odd[r] << j for j, (table, r) in enumerate(zip(self.tables, self.decode(x))))
            for x in range(self.order)
        )

    @cached_property
    def positions(self) -> tuple[tuple[ChainPosition, ...], ...]:
        """Per-factor chain positions of every id"""
        return tuple(
            tuple(table.position[r] for table, r in zip(self.tables, self.decode(x)))
            for x in range(self.order)
        )


class ConcreteSubgroup(NamedTuple):
    """Members as a bitset over ids, plus a generating set"""
    bits: int
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        """|N|"""
        return self.bits.bit_count()

    def ids(self) -> list[int]:
        """Sorted member ids"""
        return list(iter_bits(self.bits))

    def __contains__(self, element: int) -> bool:
        return bool((self.bits >> element) & 1)


def make_group(degrees: Iterable[int], max_order: int = DEFAULT_MAX_ORDER) -> ConcreteGroup:
    """prod S_d, refusing groups above max_order"""
    group = ConcreteGroup(tuple(degrees))
    if group.order > max_order:
        raise TooLarge(f"|G| = {group.order} exceeds max_order {max_order}")
    return group


def group_of(spec: TowerGroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> ConcreteGroup:
    """Concrete group of a tower spec, factors in slot order"""
    return make_group(spec.degrees, max_order)


def trivial_subgroup(group: ConcreteGroup) -> ConcreteSubgroup:
    """{1}"""
    return ConcreteSubgroup(1 << group.identity, ())


def generate(
    group: ConcreteGroup, elements: Iterable[int], start: ConcreteSubgroup | None = None
) -> ConcreteSubgroup:
    """Subgroup generated by start and elements; redundant generators are dropped"""
    current = start or trivial_subgroup(group)
    bits, gens = current.bits, list(current.generators)
    for element in elements:
        if (bits >> element) & 1:
            continue
        gens.append(element)
        tables = [group.right_table(g) for g in gens]
        queue = list(iter_bits(bits))
        while queue:
            x = queue.pop()
            for table in tables:
                y = table[x]
                if not (bits >> y) & 1:
                    bits |= 1 << y
                    queue.append(y)
    return ConcreteSubgroup(bits, tuple(gens))


def conjugacy_class(group: ConcreteGroup, element: int) -> list[int]:
    """Orbit of element under conjugation, sorted ids"""
    orbit = group.permutation_group.conjugacy_class(group.to_permutation(element))
    return sorted(group.from_permutation(x) for x in orbit)


def normal_closure(group: ConcreteGroup, element: int) -> ConcreteSubgroup:
    """Smallest normal subgroup containing element"""
    closure = group.permutation_group.normal_closure(group.to_permutation(element))
    return generate(group, (group.from_permutation(g) for g in closure.generators))


def is_normal(group: ConcreteGroup, subgroup: ConcreteSubgroup) -> bool:
    """sympy's normality test on the subgroup's generators"""
    if not subgroup.generators:
        return True
    sub = PermutationGroup([group.to_permutation(g) for g in subgroup.generators])
    return sub.is_normal(group.permutation_group)


def join_concrete(
    group: ConcreteGroup, left: ConcreteSubgroup, right: ConcreteSubgroup
) -> ConcreteSubgroup:
    """Subgroup generated by the union"""
    return generate(group, right.generators, start=left)


def all_normal_subgroups(
    group: ConcreteGroup, max_order: int = DEFAULT_MAX_ORDER
) -> list[ConcreteSubgroup]:
    """N(G): join closure of the normal closures of single elements"""
    if group.order > max_order:
        raise TooLarge(f"|G| = {group.order} exceeds max_order {max_order}")
    seen_bits = 0
    seeds: dict[int, ConcreteSubgroup] = {}
    for element in range(group.order):
        if (seen_bits >> element) & 1:
            continue
        orbit = conjugacy_class(group, element)
        for x in orbit:
            seen_bits |= 1 << x
        closure = generate(group, orbit)
        seeds.setdefault(closure.bits, closure)
    known = {trivial_subgroup(group).bits: trivial_subgroup(group)}
    known.update(seeds)
    queue = list(known.values())
    while queue:
        subgroup = queue.pop()
        for seed in seeds.values():
            if not seed.bits & ~subgroup.bits:
                continue
            joined = join_concrete(group, subgroup, seed)
            if joined.bits not in known:
                known[joined.bits] = joined
                queue.append(joined)
    logger.info("|N(G)| = %d for degrees %s", len(known), group.degrees)
    return sorted(known.values(), key=lambda n: (n.order, n.bits))


def extract_profile(group: ConcreteGroup, subgroup: ConcreteSubgroup) -> Profile:
    """Per-factor projection and sign image, read off the members"""
    eff = [ChainPosition.TRIV] * spec_of(group).t
    vectors = set()
    for x in subgroup.ids():
        for j, pos in enumerate(group.positions[x]):
            eff[j] = max(eff[j], pos)
        vectors.add(group.signs[x])
    return Profile(tuple(eff), gf2.span(len(group.degrees), vectors))


def spec_of(group: ConcreteGroup) -> TowerGroupSpec:
    """Tower spec of a concrete group whose factors are in slot order"""
    if any(degree < 3 for degree in group.degrees):
        raise NotTowerGroup(f"degrees {group.degrees} include a factor below 3")
    spec = make_spec(
        {degree: group.degrees.count(degree) for degree in set(group.degrees)}
    )
    if spec.degrees != group.degrees:
        raise NotTowerGroup(f"factors {group.degrees} are not in canonical slot order")
    return spec


def membership_agrees(
    group: ConcreteGroup, subgroup: ConcreteSubgroup, profile: Profile
) -> bool:
    """The profile's membership predicate classifies every element like the set does"""
    allowed = set(profile.signs.elements())
    for x in range(group.order):
        predicted = group.signs[x] in allowed and all(
            c <= e for c, e in zip(group.positions[x], profile.eff)
        )
        if predicted != (x in subgroup):
            return False
    return True


def concrete_lattice(
    group: ConcreteGroup, name: str, max_order: int = DEFAULT_MAX_ORDER
) -> tuple[list[ConcreteSubgroup], AbstractLattice]:
    """N(G) and its inclusion order"""
    subgroups = all_normal_subgroups(group, max_order)
    lattice = AbstractLattice.from_relation(
        name,
        [f"normal:{n.order}" for n in subgroups],
        lambda i, j: not subgroups[i].bits & ~subgroups[j].bits,
    )
    return subgroups, lattice


def differential_validate(
    spec: TowerGroupSpec,
    max_order: int = DEFAULT_MAX_ORDER,
    max_t: int = DEFAULT_MAX_T,
) -> OracleReport:
    """Compare the triple classification against the concrete group, element by element"""
    name = format_spec(spec)
    group = group_of(spec, max_order)
    subgroups = all_normal_subgroups(group, max_order)
    lattice = enumerate_lattice(spec, max_t)
    if len(subgroups) != len(lattice):
        raise MismatchReport(
            f"{name}: oracle finds {len(subgroups)} normal subgroups, triples give {len(lattice)}"
        )
    to_lattice: list[int] = []
    for subgroup in subgroups:
        profile = check_profile(spec, extract_profile(group, subgroup))
        if not membership_agrees(group, subgroup, profile):
            raise MismatchReport(f"{name}: profile of a subgroup of order {subgroup.order} "
                                 "does not describe its members")
        to_lattice.append(lattice.index(element_from_profile(spec, profile)))
    if len(set(to_lattice)) != len(lattice):
        raise MismatchReport(f"{name}: extracted profiles are not a bijection")
    from_bits = {n.bits: i for i, n in enumerate(subgroups)}
    pairs = 0
    for i, j in progress(
        combinations(range(len(subgroups)), 2),
        f"pairs of {name}",
        total=len(subgroups) * (len(subgroups) - 1) // 2,
    ):
        left, right = subgroups[i], subgroups[j]
        e_left, e_right = lattice.elements[to_lattice[i]], lattice.elements[to_lattice[j]]
        if (not left.bits & ~right.bits) != leq(e_left, e_right) or (
            not right.bits & ~left.bits
        ) != leq(e_right, e_left):
            raise MismatchReport(f"{name}: inclusion of subgroups {i} and {j} disagrees")
        meet_index = from_bits.get(left.bits & right.bits)
        if meet_index is None or lattice.index(meet(e_left, e_right)) != to_lattice[meet_index]:
            raise MismatchReport(f"{name}: meet of subgroups {i} and {j} disagrees")
        join_index = from_bits.get(join_concrete(group, left, right).bits)
        if join_index is None or lattice.index(join(e_left, e_right)) != to_lattice[join_index]:
            raise MismatchReport(f"{name}: join of subgroups {i} and {j} disagrees")
        pairs += 1
    return {
        "spec": name,
        "oracle_count": len(subgroups),
        "lattice_count": len(lattice),
        "pairs_checked": pairs,
        "match": True,
    }


class GoursatData(NamedTuple):
    """Projections and intersections of N for a split G = H x K"""
    h0: frozenset[tuple[int, ...]]
    h1: frozenset[tuple[int, ...]]
    k0: frozenset[tuple[int, ...]]
    k1: frozenset[tuple[int, ...]]


def goursat_data(
    group: ConcreteGroup, subgroup: ConcreteSubgroup, left: Sequence[int]
) -> GoursatData:
    """H0 = pi_H(N), H1 = N & H, and the same on the K side"""
    right = [j for j in range(len(group.degrees)) if j not in left]
    h0, h1, k0, k1 = set(), set(), set(), set()
    for x in subgroup.ids():
        ranks = group.decode(x)
        h_part = tuple(ranks[j] for j in left)
        k_part = tuple(ranks[j] for j in right)
        h0.add(h_part)
        k0.add(k_part)
        if not any(k_part):
            h1.add(h_part)
        if not any(h_part):
            k1.add(k_part)
    return GoursatData(frozenset(h0), frozenset(h1), frozenset(k0), frozenset(k1))


def _commutators_inside(
    tables: Sequence[SymmetricTable],
    moving: frozenset[tuple[int, ...]],
    target: frozenset[tuple[int, ...]],
) -> bool:
    """[whole block, moving] lies in target"""
    def mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(t.mult[x][y] for t, x, y in zip(tables, a, b))

    def inv(a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(t.inverse[x] for t, x in zip(tables, a))

    whole = [tuple(ranks) for ranks in _product_ranges([len(t.perms) for t in tables])]
    return all(
        mul(mul(inv(h), inv(x)), mul(h, x)) in target for h in whole for x in moving
    )


def _product_ranges(sizes: Sequence[int]) -> list[list[int]]:
    out: list[list[int]] = [[]]
    for size in sizes:
        out = [prefix + [r] for prefix in out for r in range(size)]
    return out


def goursat_check(
    group: ConcreteGroup, subgroup: ConcreteSubgroup, left: Sequence[int]
) -> bool:
    """Order identities, isomorphic sections and [H, H0] <= H1, [K, K0] <= K1"""
    data = goursat_data(group, subgroup, left)
    right = [j for j in range(len(group.degrees)) if j not in left]
    sizes_ok = (
        subgroup.order == len(data.h0) * len(data.k1) == len(data.h1) * len(data.k0)
        and len(data.h0) * len(data.k1) == len(data.k0) * len(data.h1)
    )
    left_tables = [group.tables[j] for j in left]
    right_tables = [group.tables[j] for j in right]
    return (
        sizes_ok
        and _commutators_inside(left_tables, data.h0, data.h1)
        and _commutators_inside(right_tables, data.k0, data.k1)
    )


def coatom_incidence(lattice: AbstractLattice) -> dict[int, int]:
    """Number of coatoms above each atom"""
    return {
        atom: sum(1 for c in lattice.coatoms if lattice.leq(atom, c))
        for atom in lattice.atoms
    }


LEMMA_GROUPS: dict[str, tuple[int, ...]] = {
    "C2": (2,),
    "C2^2": (2, 2),
    "C2*S3": (2, 3),
    "C2*S4": (2, 4),
    "C2*S5": (2, 5),
    "S3": (3,),
    "S4": (4,),
    "S5": (5,),
    "S6": (6,),
}

LEMMA_ORDERS: dict[str, int] = {
    "C2": 1,
    "C2^2": 6,
    "C2*S3": 2,
    "C2*S4": 2,
    "C2*S5": 2,
    "S3": 1,
    "S4": 1,
    "S5": 1,
    "S6": 1,
}


def lemma_lattices(max_order: int = DEFAULT_MAX_ORDER) -> dict[str, AbstractLattice]:
    """Concrete N(G) for the small groups met after the first tower step"""
    return {
        name: concrete_lattice(make_group(degrees, max_order), name, max_order)[1]
        for name, degrees in LEMMA_GROUPS.items()
    }
