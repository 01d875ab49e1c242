"""Finite lattices as abstract partial orders.

Elements are range(size). `below[i]` is the bitset of every j with j <= i;
the Hasse digraph (networkx) and everything else is derived from it and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import networkx as nx

from .errors import LatTowerError
from .utility import iter_bits


@dataclass(frozen=True)
class AbstractLattice:
    """Immutable finite lattice given by its order relation"""

    name: str
    labels: tuple[str, ...]
    below: tuple[int, ...]

    @classmethod
    def from_relation(
        cls, name: str, labels: Sequence[str], leq: Callable[[int, int], bool]
    ) -> AbstractLattice:
        """Build from a predicate leq(i, j) meaning i <= j"""
        size = len(labels)
        below = tuple(
            sum(1 << j for j in range(size) if leq(j, i)) for i in range(size)
        )
        return cls(name, tuple(labels), below)

    @property
    def size(self) -> int:
        """Number of elements"""
        return len(self.below)

    def leq(self, i: int, j: int) -> bool:
        """i <= j"""
        return bool((self.below[j] >> i) & 1)

    @cached_property
    def above(self) -> tuple[int, ...]:
        """above[i] is the bitset of every j with i <= j"""
        above = [0] * self.size
        for i, bits in enumerate(self.below):
            for j in iter_bits(bits):
                above[j] |= 1 << i
        return tuple(above)

    @cached_property
    def bottom(self) -> int:
        """Least element"""
        return self._unique(lambda i: self.below[i] == 1 << i, "bottom")

    @cached_property
    def top(self) -> int:
        """Greatest element"""
        return self._unique(lambda i: self.above[i] == 1 << i, "top")

    def _unique(self, test: Callable[[int], bool], what: str) -> int:
        found = [i for i in range(self.size) if test(i)]
        if len(found) != 1:
            raise LatTowerError(f"{self.name} has {len(found)} candidates for {what}")
        return found[0]

    @cached_property
    def hasse(self) -> nx.DiGraph:
        """Covering digraph, every edge pointing up"""
        strict = nx.DiGraph()
        strict.add_nodes_from(range(self.size))
        strict.add_edges_from(
            (j, i) for i, bits in enumerate(self.below) for j in iter_bits(bits) if j != i
        )
        return nx.transitive_reduction(strict)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        """Elements covered by each element"""
        return tuple(tuple(sorted(self.hasse.predecessors(i))) for i in range(self.size))

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        """Elements covering each element"""
        return tuple(tuple(sorted(self.hasse.successors(i))) for i in range(self.size))

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (lower, upper), sorted"""
        return tuple(sorted(self.hasse.edges))

    def _longest_chains(self, graph: nx.DiGraph) -> tuple[int, ...]:
        lengths = [0] * self.size
        for i in nx.topological_sort(graph):
            lengths[i] = max((lengths[j] + 1 for j in graph.predecessors(i)), default=0)
        return tuple(lengths)

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom"""
        return self._longest_chains(self.hasse)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        """Length of the longest chain up to the top"""
        return self._longest_chains(self.hasse.reverse(copy=False))

    @cached_property
    def _by_downset(self) -> dict[int, int]:
        return {bits: i for i, bits in enumerate(self.below)}

    @cached_property
    def _by_upset(self) -> dict[int, int]:
        return {bits: i for i, bits in enumerate(self.above)}

    def meet(self, i: int, j: int) -> int:
        """Greatest lower bound: the element whose down-set is the common one"""
        return self._by_downset[self.below[i] & self.below[j]]

    def join(self, i: int, j: int) -> int:
        """Least upper bound"""
        return self._by_upset[self.above[i] & self.above[j]]

    @property
    def atoms(self) -> tuple[int, ...]:
        """Elements covering the bottom"""
        return self.upper_covers[self.bottom]

    @property
    def coatoms(self) -> tuple[int, ...]:
        """Elements covered by the top"""
        return self.lower_covers[self.top]

    def interval_length(self, low: int, high: int) -> int:
        """Longest chain length in [low, high] (the lattices here are modular)"""
        if not self.leq(low, high):
            raise LatTowerError(f"{low} is not below {high}")
        return self.height[high] - self.height[low]
