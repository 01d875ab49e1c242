"""Tower groups, their factor slots and the chains N(S_k)"""

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterator, Mapping, NamedTuple

from .data import ChainPosition, SlotClass
from .errors import (
    ChainLengthMismatch,
    DegreeTooSmall,
    IllegalChainPosition,
    NegativeExponent,
    SpecParseError,
    TooLarge,
)

DEFAULT_MAX_DEGREE = 20
_FACTOR = re.compile(r"S(\d+)(?:\^(\d+))?", re.IGNORECASE)


class FactorSlot(NamedTuple):
    """The copy-th copy of S_degree; index is its rank in (degree, copy) order"""
    degree: int
    copy: int
    cls: SlotClass
    index: int

    @property
    def label(self) -> str:
        """Human readable name, e.g. '(3,2)'"""
        return f"({self.degree},{self.copy})"


def slot_class(degree: int) -> SlotClass:
    """A for S_4 factors, B for every other degree"""
    return SlotClass.A if degree == 4 else SlotClass.B


@dataclass(frozen=True)
class TowerGroupSpec:
    """G = prod S_k^{a_k}; `exponents` is sorted by degree and has no zero entries"""

    exponents: tuple[tuple[int, int], ...]

    @cached_property
    def slots(self) -> tuple[FactorSlot, ...]:
        """Factor slots in canonical order"""
        slots = []
        for degree, count in self.exponents:
            for copy in range(1, count + 1):
                slots.append(FactorSlot(degree, copy, slot_class(degree), len(slots)))
        return tuple(slots)

    @property
    def t(self) -> int:
        """Number of factors"""
        return sum(count for _, count in self.exponents)

    @property
    def a4(self) -> int:
        """Number of S_4 factors"""
        return dict(self.exponents).get(4, 0)

    @property
    def b(self) -> int:
        """Number of factors of degree other than 4"""
        return self.t - self.a4

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree of every slot, in slot order"""
        return tuple(slot.degree for slot in self.slots)

    def slot_ids(self, cls: SlotClass) -> tuple[int, ...]:
        """Indices of the slots of one class"""
        return tuple(slot.index for slot in self.slots if slot.cls == cls)

    def __str__(self) -> str:
        return format_spec(self)


def make_spec(exponents: Mapping[int, int], max_degree: int = DEFAULT_MAX_DEGREE) -> TowerGroupSpec:
    """Validate and normalize an exponent map {k: a_k}"""
    cleaned: dict[int, int] = {}
    for degree, count in exponents.items():
        degree, count = int(degree), int(count)
        if count < 0:
            raise NegativeExponent(f"multiplicity of S_{degree} is {count}")
        if count == 0:
            continue
        if degree < 3:
            raise DegreeTooSmall(f"factor S_{degree} has degree below 3")
        if degree > max_degree:
            raise TooLarge(f"degree {degree} exceeds max_degree {max_degree}")
        cleaned[degree] = cleaned.get(degree, 0) + count
    return TowerGroupSpec(tuple(sorted(cleaned.items())))


def parse_spec(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> TowerGroupSpec:
    """Parse 'S4^2*S3^2'-style literals; case and whitespace insensitive"""
    positions = [i for i, char in enumerate(text) if not char.isspace()]
    compact = "".join(text[i] for i in positions)

    def where(pos: int) -> int:
        return positions[pos] if pos < len(positions) else len(text)

    if not compact:
        raise SpecParseError("empty spec literal", 0)
    if compact == "1":
        return TowerGroupSpec(())
    counts: Counter[int] = Counter()
    pos = 0
    while True:
        match = _FACTOR.match(compact, pos)
        if match is None:
            raise SpecParseError(f"expected a factor like 'S3^2' in {text!r}", where(pos))
        degree = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        if degree < 3 and count > 0:
            raise DegreeTooSmall(f"factor S{degree} at position {where(pos)} has degree below 3")
        counts[degree] += count
        pos = match.end()
        if pos == len(compact):
            break
        if compact[pos] != "*":
            raise SpecParseError(f"expected '*' in {text!r}", where(pos))
        pos += 1
    return make_spec(counts, max_degree)


def format_spec(spec: TowerGroupSpec) -> str:
    """Canonical literal, degrees descending ('1' for the trivial group)"""
    parts = [
        f"S{degree}" if count == 1 else f"S{degree}^{count}"
        for degree, count in reversed(spec.exponents)
    ]
    return "*".join(parts) or "1"


def order(spec: TowerGroupSpec) -> int:
    """|G|"""
    return prod(factorial(degree) ** count for degree, count in spec.exponents)


def chain(k: int) -> list[ChainPosition]:
    """N(S_k) bottom to top"""
    if k < 3:
        raise DegreeTooSmall(f"S_{k} is not a tower factor")
    if k == 4:
        return [ChainPosition.TRIV, ChainPosition.V, ChainPosition.ALT, ChainPosition.FULL]
    return [ChainPosition.TRIV, ChainPosition.ALT, ChainPosition.FULL]


def chain_iso(k: int, k2: int) -> dict[ChainPosition, ChainPosition]:
    """The unique order-preserving bijection N(S_k) -> N(S_k2)"""
    source, target = chain(k), chain(k2)
    if len(source) != len(target):
        raise ChainLengthMismatch(
            f"N(S_{k}) has length {len(source) - 1}, N(S_{k2}) has length {len(target) - 1}"
        )
    return dict(zip(source, target))


def check_position(k: int, pos: ChainPosition) -> ChainPosition:
    """Reject V outside degree 4"""
    if pos not in chain(k):
        raise IllegalChainPosition(f"{pos.short} is not a normal subgroup of S_{k}")
    return pos


def position_order(k: int, pos: ChainPosition) -> int:
    """Cardinality of a chain position inside S_k"""
    check_position(k, pos)
    return {
        ChainPosition.TRIV: 1,
        ChainPosition.V: 4,
        ChainPosition.ALT: factorial(k) // 2,
        ChainPosition.FULL: factorial(k),
    }[pos]


def all_specs(max_t: int, degrees: tuple[int, ...]) -> Iterator[TowerGroupSpec]:
    """Every spec with T <= max_t built from the given degrees"""
    for t in range(max_t + 1):
        for combo in combinations_with_replacement(sorted(degrees), t):
            yield make_spec(Counter(combo))
