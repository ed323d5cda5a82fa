"""Cross-cutting checks: block designs, edge-criticality, and the bundled
16-vertex example verified fact by fact."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from propb._bits import mask_of
from propb.colouring import enumerate_proper, is_two_colourable, pair_opposites
from propb.constructions import affine_plane_gf4, derive_h8
from propb.core import DyadicValue, Hypergraph, q_value, union


@dataclass(frozen=True)
class DesignCheckResult:
    """Outcome of a t-design test over a block family.

    `lam` is the common t-subset count when it exists; otherwise
    `counterexample` is a t-subset covered a different number of times than
    the first t-subset checked.
    """

    t: int
    point_count: int
    block_count: int
    block_size: int
    lam: int | None
    counterexample: frozenset[int] | None


def design_check(blocks: Sequence[Iterable[int]], point_count: int, t: int) -> DesignCheckResult:
    """Count how many blocks cover each t-subset of the points.

    Blocks must be duplicate-free and all the same size >= t.  Exhaustive
    over all C(point_count, t) subsets, so exact by construction.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if point_count < 0:
        raise ValueError("point count must be nonnegative")
    families = [frozenset(b) for b in blocks]
    if not families:
        raise ValueError("no blocks given")
    if len(set(families)) != len(families):
        raise ValueError("duplicate blocks")
    sizes = {len(b) for b in families}
    if len(sizes) != 1:
        raise ValueError(f"mixed block sizes {sorted(sizes)}")
    block_size = sizes.pop()
    if t > block_size:
        raise ValueError("t exceeds the block size")
    for b in families:
        for p in b:
            if not 0 <= p < point_count:
                raise ValueError(f"point {p} out of range")

    masks = [mask_of(b) for b in families]
    lam: int | None = None
    for subset in combinations(range(point_count), t):
        smask = mask_of(subset)
        count = sum(1 for bm in masks if bm & smask == smask)
        if lam is None:
            lam = count
        elif count != lam:
            return DesignCheckResult(
                t=t,
                point_count=point_count,
                block_count=len(families),
                block_size=block_size,
                lam=None,
                counterexample=frozenset(subset),
            )
    return DesignCheckResult(
        t=t,
        point_count=point_count,
        block_count=len(families),
        block_size=block_size,
        lam=lam,
        counterexample=None,
    )


def is_edge_critical(h: Hypergraph) -> tuple[bool, frozenset[int] | None]:
    """Is every edge essential to non-2-colourability?

    Requires h itself to be non-2-colourable.  Returns (True, None) when
    deleting any single edge makes it colourable, otherwise (False, e) for
    the first removable edge in canonical order.
    """
    colourable, _ = is_two_colourable(h)
    if colourable:
        raise ValueError("input is already 2-colourable")
    masks = h.edge_masks
    for i, mask in enumerate(masks):
        rest = Hypergraph(h.v, masks[:i] + masks[i + 1 :])
        colourable, _ = is_two_colourable(rest)
        if not colourable:
            return False, h.edges[i]
    return True, None


@dataclass(frozen=True)
class CheckEntry:
    name: str
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    """Every documented fact about the 16-vertex example, checked one by one."""

    checks: tuple[CheckEntry, ...]
    q_total: DyadicValue

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.checks)


def verify_paper_example(
    h4: Hypergraph | None = None, h8: Hypergraph | None = None
) -> VerificationReport:
    """Re-derive and verify the 16-vertex example end to end.

    With no arguments this builds the affine plane and its blocking family
    from scratch and checks: the 16/20 shape, the 120 proper colourings, the
    8-8 balance of each, the 60 opposite pairs, the 60 blocking 8-edges, the
    80-edge union, its non-2-colourability, the exact weight 95/64, the
    bracketing 23/16 < q < 24/16, and that the blue sets form a 3-(16,8,12)
    design.  Either part can be substituted to probe how the checks fail.
    """
    if h4 is None:
        h4 = affine_plane_gf4()
    if h8 is None:
        h8 = derive_h8(h4)
    checks: list[CheckEntry] = []

    sizes = sorted({m.bit_count() for m in h4.edge_masks})
    shape_ok = h4.v == 16 and h4.edge_count == 20 and sizes == [4]
    checks.append(
        CheckEntry(
            name="plane-shape",
            expected="16 vertices, 20 edges of size 4",
            actual=f"{h4.v} vertices, {h4.edge_count} edges of size {sizes}",
            passed=shape_ok,
        )
    )

    census = enumerate_proper(h4, materialize=True)
    assert census.colourings is not None
    checks.append(
        CheckEntry(
            name="proper-count",
            expected="120",
            actual=str(census.total_proper),
            passed=census.total_proper == 120,
        )
    )

    unbalanced = [c for c in census.colourings if 2 * c.red_count != h4.v]
    checks.append(
        CheckEntry(
            name="balance",
            expected="every proper colouring 8 red / 8 blue",
            actual="all balanced" if not unbalanced else f"{len(unbalanced)} unbalanced",
            passed=not unbalanced and census.balanced_count == census.total_proper,
        )
    )

    try:
        pairs = pair_opposites(list(census.colourings))
        pairs_actual = str(len(pairs))
        pairs_ok = len(pairs) == 60
    except ValueError as exc:
        pairs_actual = f"error: {exc}"
        pairs_ok = False
    checks.append(
        CheckEntry(name="opposite-pairs", expected="60", actual=pairs_actual, passed=pairs_ok)
    )

    h8_sizes = sorted({m.bit_count() for m in h8.edge_masks})
    checks.append(
        CheckEntry(
            name="blocking-shape",
            expected="60 edges of size 8",
            actual=f"{h8.edge_count} edges of size {h8_sizes}",
            passed=h8.edge_count == 60 and h8_sizes == [8],
        )
    )

    h = union(h4, h8)
    checks.append(
        CheckEntry(
            name="union-edges",
            expected="80",
            actual=str(h.edge_count),
            passed=h.edge_count == 80,
        )
    )

    proper_total = enumerate_proper(h).total_proper
    if proper_total == 0:
        uncol_actual = "not 2-colourable"
    else:
        _, witness = is_two_colourable(h)
        reds = " ".join(str(u) for u in sorted(witness.red)) if witness else ""
        uncol_actual = f"2-colourable ({proper_total} proper, witness red: {reds})"
    checks.append(
        CheckEntry(
            name="uncolourable",
            expected="not 2-colourable",
            actual=uncol_actual,
            passed=proper_total == 0,
        )
    )

    q = q_value(h)
    checks.append(
        CheckEntry(
            name="weight",
            expected="95/2^6",
            actual=str(q),
            passed=q == DyadicValue(95, 6),
        )
    )

    lower, upper = DyadicValue(23, 4), DyadicValue(24, 4)
    checks.append(
        CheckEntry(
            name="weight-bracket",
            expected="23/2^4 < q < 24/2^4",
            actual=f"q = {q}",
            passed=lower < q < upper,
        )
    )

    try:
        design = design_check([c.blue for c in census.colourings], h4.v, 3)
        if design.lam is not None:
            design_actual = f"lambda = {design.lam}"
        else:
            design_actual = f"not a design (counterexample {sorted(design.counterexample)})"
        design_ok = design.lam == 12 and design.block_size == 8 and design.point_count == 16
    except ValueError as exc:
        design_actual = f"error: {exc}"
        design_ok = False
    checks.append(
        CheckEntry(
            name="blue-design",
            expected="3-(16,8,12) design",
            actual=design_actual,
            passed=design_ok,
        )
    )

    return VerificationReport(checks=tuple(checks), q_total=q)
