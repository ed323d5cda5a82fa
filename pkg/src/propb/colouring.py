"""Two-colouring engines.

`enumerate_proper` scans the whole colouring space exactly.  Vertex 0 is
pinned blue and the count doubled (a colouring and its complement are proper
together), and the remaining space is swept in blocks encoded as huge-int bit
patterns, so one block of 2**16 colourings costs a couple of word-parallel
integer operations per edge.  Blocks merge in a fixed order, which keeps
counts and materialized lists identical for any worker count.

`is_two_colourable` is a backtracking decision procedure with unit
propagation for instances past the exhaustive limit.  It always terminates
(worst case exponential) and its witness is reproducible: branching is on the
lowest-index uncoloured vertex, blue before red.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Sequence

from propb._bits import bit_indices, mask_members, scan_bit_pattern, scan_ones, scan_popcount_pattern
from propb.core import Hypergraph

DEFAULT_ENUM_LIMIT = 28
ENUM_LIMIT_ENV = "PROPB_ENUM_LIMIT"

_BLOCK_BITS = 16


def enumeration_limit() -> int:
    """Vertex ceiling for exhaustive enumeration (env override: PROPB_ENUM_LIMIT)."""
    raw = os.environ.get(ENUM_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_ENUM_LIMIT


@dataclass(frozen=True)
class Colouring:
    """Red/blue split of vertices 0..v-1; bit i of red_mask means vertex i is red."""

    v: int
    red_mask: int

    def __post_init__(self) -> None:
        if self.v < 0:
            raise ValueError("vertex count must be nonnegative")
        if not 0 <= self.red_mask < (1 << self.v):
            raise ValueError("red set out of range for vertex count")

    @classmethod
    def from_red(cls, v: int, red: Sequence[int] | frozenset[int] | set[int]) -> "Colouring":
        mask = 0
        for u in red:
            if not 0 <= u < v:
                raise ValueError(f"vertex {u} out of range for v={v}")
            mask |= 1 << u
        return cls(v, mask)

    @property
    def red(self) -> frozenset[int]:
        return frozenset(bit_indices(self.red_mask))

    @property
    def blue_mask(self) -> int:
        return ((1 << self.v) - 1) ^ self.red_mask

    @property
    def blue(self) -> frozenset[int]:
        return frozenset(bit_indices(self.blue_mask))

    @property
    def red_count(self) -> int:
        return self.red_mask.bit_count()

    def complement(self) -> "Colouring":
        return Colouring(self.v, self.blue_mask)


@dataclass(frozen=True)
class EnumerationReport:
    """Exact census of proper colourings.

    `colourings` is populated only when materialization was requested; it is
    sorted by red bitmask and closed under complement.
    """

    total_proper: int
    balanced_count: int
    colourings: tuple[Colouring, ...] | None = None


def _check_same_vertices(h: Hypergraph, c: Colouring) -> None:
    if h.v != c.v:
        raise ValueError("hypergraph and colouring have different vertex counts")


def is_proper(h: Hypergraph, c: Colouring) -> bool:
    """True iff no edge is monochromatic under c."""
    _check_same_vertices(h, c)
    red = c.red_mask
    for mask in h.edge_masks:
        hit = mask & red
        if hit == mask or hit == 0:
            return False
    return True


def monochromatic_edges(h: Hypergraph, c: Colouring) -> list[frozenset[int]]:
    """All edges lying inside one colour class, in canonical edge order."""
    _check_same_vertices(h, c)
    red = c.red_mask
    out = []
    for mask in h.edge_masks:
        hit = mask & red
        if hit == mask or hit == 0:
            out.append(frozenset(mask_members(mask)))
    return out


def _scan_block(
    edge_vertices: tuple[tuple[int, ...], ...],
    v: int,
    t_bits: int,
    materialize: bool,
    offset: int,
) -> tuple[int, int, list[int]]:
    """Census one block of 2**t_bits colourings starting at scan offset.

    Scan index k maps to the colouring with red mask k << 1 (vertex 0 blue).
    Bit b of k is vertex b+1; inside the block, bits below t_bits vary and
    come from the cached periodic patterns, higher bits are fixed by offset.
    """
    size = 1 << t_bits
    full = scan_ones(t_bits)
    pats = [0] * v
    for u in range(1, v):
        b = u - 1
        if b < t_bits:
            pats[u] = scan_bit_pattern(b, t_bits)
        elif (offset >> b) & 1:
            pats[u] = full
    cpats = [full ^ p for p in pats]

    mono = 0
    for members in edge_vertices:
        red_mono = blue_mono = full
        for u in members:
            red_mono &= pats[u]
            blue_mono &= cpats[u]
        mono |= red_mono | blue_mono
        if mono == full:
            break
    proper = full ^ mono

    count = proper.bit_count()
    balanced = 0
    if count and v % 2 == 0:
        wanted = v // 2 - offset.bit_count()
        balanced = (proper & scan_popcount_pattern(t_bits, wanted)).bit_count()

    reds: list[int] = []
    if materialize and count:
        data = proper.to_bytes((size + 7) // 8, "little")
        for i, byte in enumerate(data):
            base = i << 3
            while byte:
                low = byte & -byte
                reds.append((offset | (base + low.bit_length() - 1)) << 1)
                byte ^= low
    return count, balanced, reds


def enumerate_proper(
    h: Hypergraph,
    materialize: bool = False,
    workers: int = 1,
    limit: int | None = None,
) -> EnumerationReport:
    """Exact count (and optionally the list) of proper colourings of h.

    Counts cover all 2**v colourings.  Refuses hypergraphs above the
    enumeration limit; use is_two_colourable for a yes/no answer there.
    """
    if limit is None:
        limit = enumeration_limit()
    if h.v > limit:
        raise ValueError(
            f"{h.v} vertices exceeds the exhaustive enumeration limit ({limit}); "
            "use is_two_colourable for a decision"
        )
    v = h.v
    if v == 0:
        cols = (Colouring(0, 0),) if materialize else None
        return EnumerationReport(total_proper=1, balanced_count=1, colourings=cols)

    half_bits = v - 1
    t_bits = min(half_bits, _BLOCK_BITS)
    edge_vertices = tuple(mask_members(m) for m in h.edge_masks)
    offsets = range(0, 1 << half_bits, 1 << t_bits)
    scan = partial(_scan_block, edge_vertices, v, t_bits, materialize)

    if workers > 1 and len(offsets) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(scan, offsets))
    else:
        parts = [scan(o) for o in offsets]

    total = 0
    balanced = 0
    red_masks: list[int] = []
    for count, bal, reds in parts:
        total += count
        balanced += bal
        red_masks.extend(reds)

    colourings = None
    if materialize:
        full = (1 << v) - 1
        both = red_masks + [full ^ r for r in red_masks]
        both.sort()
        colourings = tuple(Colouring(v, r) for r in both)
    return EnumerationReport(2 * total, 2 * balanced, colourings)


def is_two_colourable(h: Hypergraph) -> tuple[bool, Colouring | None]:
    """Decide 2-colourability; returns (True, witness) or (False, None)."""
    v = h.v
    full = (1 << v) - 1
    incident: list[list[int]] = [[] for _ in range(v)]
    for mask in h.edge_masks:
        for u in mask_members(mask):
            incident[u].append(mask)

    red = 0
    blue = 0
    trail: list[tuple[int, bool]] = []

    def paint(queue: list[tuple[int, bool]]) -> bool:
        """Apply queued assignments plus unit consequences; False on conflict.

        Whatever got painted stays on the trail even when a conflict follows,
        so callers roll back to their own mark.
        """
        nonlocal red, blue
        i = 0
        while i < len(queue):
            u, as_red = queue[i]
            i += 1
            bit = 1 << u
            if (red | blue) & bit:
                if bool(red & bit) != as_red:
                    return False
                continue
            if as_red:
                red |= bit
            else:
                blue |= bit
            trail.append((bit, as_red))
            for mask in incident[u]:
                r = mask & red
                b = mask & blue
                if r == mask or b == mask:
                    return False
                rest = mask & ~(red | blue)
                if rest and rest & (rest - 1) == 0:
                    # one member left; if the rest share a colour, force the opposite
                    if b == 0:
                        queue.append((rest.bit_length() - 1, False))
                    elif r == 0:
                        queue.append((rest.bit_length() - 1, True))
        return True

    def undo(mark: int) -> None:
        nonlocal red, blue
        while len(trail) > mark:
            bit, was_red = trail.pop()
            if was_red:
                red ^= bit
            else:
                blue ^= bit

    stack: list[list[int]] = []  # frames: [vertex, tried_red, trail_mark]
    while True:
        free = full & ~(red | blue)
        if free == 0:
            return True, Colouring(v, red)
        u = (free & -free).bit_length() - 1
        stack.append([u, 0, len(trail)])
        ok = paint([(u, False)])
        while not ok:
            if not stack:
                return False, None
            frame = stack[-1]
            undo(frame[2])
            if frame[1] == 0:
                frame[1] = 1
                ok = paint([(frame[0], True)])
            else:
                stack.pop()


def pair_opposites(colourings: Sequence[Colouring]) -> list[tuple[Colouring, Colouring]]:
    """Group a complement-closed list of colourings into opposite pairs.

    Within a pair the member whose red set contains vertex 0 comes first;
    pairs are sorted by that member's red bitmask.  Rejects duplicates,
    lists not closed under complement, and mixed vertex counts.
    """
    if not colourings:
        return []
    v = colourings[0].v
    if any(c.v != v for c in colourings):
        raise ValueError("colourings live on different vertex counts")
    masks = [c.red_mask for c in colourings]
    seen = set(masks)
    if len(seen) != len(masks):
        raise ValueError("duplicate colourings in input")
    full = (1 << v) - 1
    for m in seen:
        partner = full ^ m
        if partner == m:
            raise ValueError("self-complementary colouring in input")
        if partner not in seen:
            raise ValueError("input list is not closed under complement")
    firsts = sorted(m for m in seen if m & 1)
    return [(Colouring(v, m), Colouring(v, full ^ m)) for m in firsts]
