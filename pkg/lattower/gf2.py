"""Small GF(2) linear algebra on int bitsets.

Signs are written additively: bit 1 is the sign -1, bit 0 is +1. Bit i of a
vector is coordinate i, and bit strings list coordinate 0 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import BadCoordinate, WidthMismatch
from .utility import iter_bits


class SignVector(NamedTuple):
    """A vector of F_2^width"""
    width: int
    bits: int

    def __str__(self) -> str:
        return to_bitstring(self.bits, self.width)


def to_bitstring(bits: int, width: int) -> str:
    """'110' has coordinates 0 and 1 set"""
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(width))


def from_bitstring(text: str) -> SignVector:
    """Inverse of to_bitstring"""
    if any(char not in "01" for char in text):
        raise ValueError(f"not a bit string: {text!r}")
    return SignVector(len(text), sum(1 << i for i, char in enumerate(text) if char == "1"))


def to_signs(vector: SignVector) -> tuple[int, ...]:
    """Multiplicative form, +1/-1 per coordinate"""
    return tuple(-1 if (vector.bits >> i) & 1 else 1 for i in range(vector.width))


def from_signs(signs: Sequence[int]) -> SignVector:
    """Inverse of to_signs"""
    bits = 0
    for i, sign in enumerate(signs):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if sign == -1:
            bits |= 1 << i
    return SignVector(len(signs), bits)


def unit(width: int, coord: int) -> SignVector:
    """Unit vector at coord"""
    if not 0 <= coord < width:
        raise BadCoordinate(f"coordinate {coord} outside width {width}")
    return SignVector(width, 1 << coord)


def dot(left: int, right: int) -> int:
    """Standard bilinear form"""
    return (left & right).bit_count() & 1


def _reduce(rows: dict[int, int], vector: int) -> int:
    for pivot, row in rows.items():
        if (vector >> pivot) & 1:
            vector ^= row
    return vector


def _insert(rows: dict[int, int], vector: int) -> bool:
    vector = _reduce(rows, vector)
    if not vector:
        return False
    pivot = (vector & -vector).bit_length() - 1
    for other, row in rows.items():
        if (row >> pivot) & 1:
            rows[other] = row ^ vector
    rows[pivot] = vector
    return True


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_2^width kept in reduced row-echelon form.

    Pivots are lowest set bits and the basis is sorted by pivot, so equal
    subspaces compare equal field by field.
    """

    width: int
    basis: tuple[int, ...]

    @classmethod
    def zero(cls, width: int) -> Subspace:
        """{0}"""
        return cls(width, ())

    @classmethod
    def full(cls, width: int) -> Subspace:
        """F_2^width"""
        return cls(width, tuple(1 << i for i in range(width)))

    @property
    def dim(self) -> int:
        """Dimension"""
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        """Number of vectors"""
        return 1 << len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        """Pivot coordinate of each basis row"""
        return tuple((row & -row).bit_length() - 1 for row in self.basis)

    @cached_property
    def support(self) -> int:
        """Coordinates where some vector is nonzero, as a bitset"""
        bits = 0
        for row in self.basis:
            bits |= row
        return bits

    def __contains__(self, vector: int) -> bool:
        return _reduce(dict(zip(self.pivots, self.basis)), vector) == 0

    def elements(self) -> Iterator[int]:
        """All 2^dim vectors"""
        for choice in product((0, 1), repeat=self.dim):
            vector = 0
            for pick, row in zip(choice, self.basis):
                if pick:
                    vector ^= row
            yield vector

    def to_json(self) -> list[str]:
        """Basis as bit strings"""
        return [to_bitstring(row, self.width) for row in self.basis]

    def __str__(self) -> str:
        return "span{" + ",".join(self.to_json()) + "}"


def span(width: int, vectors: Iterable[int | SignVector]) -> Subspace:
    """Canonical subspace spanned by the vectors"""
    rows: dict[int, int] = {}
    for vector in vectors:
        if isinstance(vector, SignVector):
            if vector.width != width:
                raise WidthMismatch(f"vector of width {vector.width} in F_2^{width}")
            vector = vector.bits
        if vector >> width:
            raise WidthMismatch(f"vector {vector:b} does not fit width {width}")
        _insert(rows, vector)
    return Subspace(width, tuple(rows[p] for p in sorted(rows)))


def from_json(width: int, rows: Iterable[str | Sequence[int]]) -> Subspace:
    """Inverse of Subspace.to_json; a row may also be a list of +1/-1 signs"""
    return span(
        width,
        (from_bitstring(row) if isinstance(row, str) else from_signs(row) for row in rows),
    )


def _same_width(*spaces: Subspace) -> int:
    widths = {space.width for space in spaces}
    if len(widths) != 1:
        raise WidthMismatch(f"widths differ: {sorted(widths)}")
    return widths.pop()


def contains(space: Subspace, vector: SignVector) -> bool:
    """Membership by row reduction"""
    if vector.width != space.width:
        raise WidthMismatch(f"vector of width {vector.width} in F_2^{space.width}")
    return vector.bits in space


def is_subspace(small: Subspace, big: Subspace) -> bool:
    """small <= big"""
    _same_width(small, big)
    return all(row in big for row in small.basis)


def subspace_sum(left: Subspace, right: Subspace) -> Subspace:
    """left + right"""
    width = _same_width(left, right)
    return span(width, left.basis + right.basis)


def annihilator(space: Subspace) -> Subspace:
    """{f : f.v = 0 for every v in space}"""
    pivot_rows = dict(zip(space.pivots, space.basis))
    vectors = []
    for col in range(space.width):
        if col in pivot_rows:
            continue
        functional = 1 << col
        for pivot, row in pivot_rows.items():
            if (row >> col) & 1:
                functional |= 1 << pivot
        vectors.append(functional)
    return span(space.width, vectors)


def intersect(left: Subspace, right: Subspace) -> Subspace:
    """left & right, through the double annihilator"""
    _same_width(left, right)
    return annihilator(subspace_sum(annihilator(left), annihilator(right)))


def _check_coords(coords: Sequence[int], width: int):
    if len(set(coords)) != len(coords):
        raise BadCoordinate(f"repeated coordinates in {list(coords)}")
    for coord in coords:
        if not 0 <= coord < width:
            raise BadCoordinate(f"coordinate {coord} outside width {width}")


def _gather(vector: int, coords: Sequence[int]) -> int:
    out = 0
    for j, coord in enumerate(coords):
        if (vector >> coord) & 1:
            out |= 1 << j
    return out


def _scatter(vector: int, coords: Sequence[int]) -> int:
    out = 0
    for j in iter_bits(vector):
        out |= 1 << coords[j]
    return out


def project(space: Subspace, coords: Sequence[int]) -> Subspace:
    """Image under keeping only coords (in the given order)"""
    _check_coords(coords, space.width)
    return span(len(coords), (_gather(row, coords) for row in space.basis))


def embed(space: Subspace, coords: Sequence[int], width: int) -> Subspace:
    """Place coordinate j of space at coords[j] inside F_2^width"""
    if len(coords) != space.width:
        raise WidthMismatch(f"{len(coords)} coordinates for width {space.width}")
    _check_coords(coords, width)
    return span(width, (_scatter(row, coords) for row in space.basis))


def permute(space: Subspace, mapping: Sequence[int]) -> Subspace:
    """Move coordinate i to mapping[i]"""
    if sorted(mapping) != list(range(space.width)):
        raise BadCoordinate(f"{list(mapping)} is not a permutation of width {space.width}")
    return span(space.width, (_scatter(row, mapping) for row in space.basis))


def enumerate_subspaces(width: int) -> Iterator[Subspace]:
    """Every subspace of F_2^width exactly once, by echelon shape"""
    for dim in range(width + 1):
        for pivots in combinations(range(width), dim):
            pivot_set = set(pivots)
            free = [
                [col for col in range(pivot + 1, width) if col not in pivot_set]
                for pivot in pivots
            ]
            choices = [range(1 << len(cols)) for cols in free]
            for picks in product(*choices):
                yield Subspace(
                    width,
                    tuple(
                        (1 << pivot) | _scatter(pick, cols)
                        for pivot, pick, cols in zip(pivots, picks, free)
                    ),
                )
