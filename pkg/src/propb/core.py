"""Exact data model: hypergraphs with bitmask edges, dyadic weights, big binomials.

Everything in this module is immutable and exact.  No floating point enters
any value that downstream code compares, accumulates, or serializes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from propb._bits import mask_members


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient C(a, b); zero when b > a.

    Raises ValueError on negative arguments.
    """
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class DyadicValue:
    """Nonnegative rational numerator / 2**exponent in canonical form.

    Canonical means the numerator is odd or zero (and a zero value has
    exponent 0), so structural equality is value equality.  Addition,
    subtraction, and comparison are exact integer arithmetic.
    """

    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        n, e = self.numerator, self.exponent
        if n < 0:
            raise ValueError("dyadic numerator must be nonnegative")
        if e < 0:
            raise ValueError("dyadic exponent must be nonnegative")
        if n == 0:
            e = 0
        else:
            drop = min(e, (n & -n).bit_length() - 1)
            n >>= drop
            e -= drop
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    def _aligned(self, other: "DyadicValue") -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return (
            self.numerator << (e - self.exponent),
            other.numerator << (e - other.exponent),
            e,
        )

    def __add__(self, other: "DyadicValue") -> "DyadicValue":
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, e = self._aligned(other)
        return DyadicValue(a + b, e)

    def __sub__(self, other: "DyadicValue") -> "DyadicValue":
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, e = self._aligned(other)
        if a < b:
            raise ValueError("dyadic subtraction would go negative")
        return DyadicValue(a - b, e)

    def __lt__(self, other: "DyadicValue") -> bool:
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a < b

    def __le__(self, other: "DyadicValue") -> bool:
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a <= b

    def __gt__(self, other: "DyadicValue") -> bool:
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a > b

    def __ge__(self, other: "DyadicValue") -> bool:
        if not isinstance(other, DyadicValue):
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a >= b

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.exponent}"

    def decimal_str(self) -> str:
        """Exact finite decimal expansion (dyadic rationals always have one)."""
        if self.exponent == 0:
            return str(self.numerator)
        digits = str(self.numerator * 5 ** self.exponent).rjust(self.exponent + 1, "0")
        return digits[: -self.exponent] + "." + digits[-self.exponent :]


def _edge_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), mask_members(mask))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on vertices 0..v-1.

    Edges are bitmasks held in canonical order: ascending size, then
    lexicographic by sorted member list.  Duplicates collapse, so structural
    equality is hypergraph equality and serialization is deterministic.
    """

    v: int
    edge_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.v < 0:
            raise ValueError("vertex count must be nonnegative")
        limit = 1 << self.v
        canon = sorted(set(self.edge_masks), key=_edge_sort_key)
        for mask in canon:
            if mask <= 0 or mask >= limit:
                raise ValueError("edge mask out of range for vertex count")
            if mask.bit_count() < 2:
                raise ValueError("every edge needs at least 2 vertices")
        object.__setattr__(self, "edge_masks", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edge_masks)

    @property
    def edges(self) -> tuple[frozenset[int], ...]:
        """Edges as vertex sets, in canonical order."""
        return tuple(frozenset(mask_members(m)) for m in self.edge_masks)


def make_hypergraph(v: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validated constructor from vertex sets.

    Rejects a negative vertex count, edges with fewer than 2 distinct
    members, and out-of-range vertices.  Duplicate edges collapse.
    """
    if v < 0:
        raise ValueError("vertex count must be nonnegative")
    masks = []
    for edge in edges:
        members = set(edge)
        if len(members) < 2:
            raise ValueError(f"edge {sorted(members)} has fewer than 2 distinct vertices")
        mask = 0
        for u in members:
            if not 0 <= u < v:
                raise ValueError(f"vertex {u} out of range for v={v}")
            mask |= 1 << u
        masks.append(mask)
    return Hypergraph(v, tuple(masks))


def q_value(h: Hypergraph) -> DyadicValue:
    """Sum of 2**(-|e|) over all edges, as an exact dyadic value."""
    if not h.edge_masks:
        return DyadicValue(0)
    sizes = [m.bit_count() for m in h.edge_masks]
    top = max(sizes)
    total = sum(1 << (top - s) for s in sizes)
    return DyadicValue(total, top)


def min_edge_size(h: Hypergraph) -> int:
    """Smallest edge size; rejects an edgeless hypergraph."""
    if not h.edge_masks:
        raise ValueError("hypergraph has no edges")
    return min(m.bit_count() for m in h.edge_masks)


def union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Edge union of two hypergraphs on the same vertex set."""
    if h1.v != h2.v:
        raise ValueError("vertex counts differ")
    return Hypergraph(h1.v, h1.edge_masks + h2.edge_masks)
