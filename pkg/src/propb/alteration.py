"""Randomized construction of non-2-colourable hypergraphs with small weight.

The pipeline samples roughly half the classical first-moment number of
uniform n-edges on n*n/2 vertices, enumerates the proper colourings that
survive, and then adds one large monochromatic edge per survivor.  The
result is non-2-colourable unconditionally: a colouring either hits a
monochromatic sampled edge or is a survivor and hits its own blocking edge.

Exact arithmetic everywhere it matters: the monochromatic-edge
probabilities are rationals, the weights dyadic; only the asymptotic
formulas and the expectation bounds live in floating point (log space).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from propb._bits import mask_members
from propb.colouring import Colouring, enumerate_proper, enumeration_limit
from propb.core import DyadicValue, Hypergraph, binomial, make_hypergraph, q_value, union

# Retry r of a run reseeds with seed ^ (r * _RESEED_STEP) mod 2**64, so one
# integer seed determines the whole retry sequence.
_RESEED_STEP = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


class RetriesExhaustedError(RuntimeError):
    """Strict mode ran out of retries before the survivor threshold was met."""


def derive_seed(seed: int, retry: int) -> int:
    """Seed used for retry number `retry` (retry 0 is the seed itself)."""
    return seed ^ ((_RESEED_STEP * retry) & _MASK64)


def mono_probability(v1: int, v2: int, n: int) -> Fraction:
    """Chance a uniform n-subset of v1+v2 vertices lands inside one class.

    Exact: (C(v1, n) + C(v2, n)) / C(v1+v2, n).
    """
    if n < 1:
        raise ValueError("edge size must be at least 1")
    if v1 < 0 or v2 < 0:
        raise ValueError("class sizes must be nonnegative")
    v = v1 + v2
    if v < n:
        raise ValueError("fewer vertices than the edge size")
    return Fraction(binomial(v1, n) + binomial(v2, n), binomial(v, n))


def balanced_probability(v: int, n: int) -> Fraction:
    """mono_probability at the balanced split: 2*C(v/2, n) / C(v, n)."""
    if v % 2:
        raise ValueError("vertex count must be even")
    if n < 1:
        raise ValueError("edge size must be at least 1")
    if v < n:
        raise ValueError("fewer vertices than the edge size")
    return Fraction(2 * binomial(v // 2, n), binomial(v, n))


def asymptotic_q(n: int) -> float:
    """Leading-order value of the balanced probability at v = n*n/2: 2/(e*2**n)."""
    if n < 2:
        raise ValueError("edge size must be at least 2")
    return 2.0 / (math.e * 2.0 ** n)


def erdos_edge_count(n: int) -> int:
    """Classical first-moment edge count, ceil((e*ln2/4) * n*n * 2**n)."""
    if n < 2:
        raise ValueError("edge size must be at least 2")
    return math.ceil(math.e * math.log(2.0) / 4.0 * n * n * 2.0 ** n)


def halved_edge_count(n: int) -> int:
    """Half the classical count, rounded up; what the pipeline actually samples."""
    return (erdos_edge_count(n) + 1) // 2


class ExpectationBounds(NamedTuple):
    """Upper bounds on the expected number of surviving colourings."""

    tight: float  # 2**v * (1 - q)**m
    crude: float  # exp(v*ln2 - q*m)
    log_tight: float
    log_crude: float


def expected_proper_upper_bound(v: int, n: int, m: int) -> ExpectationBounds:
    """Both survivor-expectation bounds, evaluated in log space.

    Uses the balanced probability q = balanced_probability(v, n); since the
    balanced split minimizes the monochromatic chance, 2**v * (1-q)**m bounds
    the expected survivor count for m independent uniform edges, and
    1-t <= exp(-t) gives the cruder closed form.
    """
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    q = float(balanced_probability(v, n))
    ln2 = math.log(2.0)
    if q == 1.0 and m > 0:
        log_tight = -math.inf
    else:
        log_tight = v * ln2 + m * math.log1p(-q)
    log_crude = v * ln2 - q * m
    if m == 0:
        tight = math.ldexp(1.0, v)
    else:
        tight = _safe_exp(log_tight)
    return ExpectationBounds(tight, _safe_exp(log_crude), log_tight, log_crude)


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def sample_uniform_edges(v: int, n: int, m: int, seed: int) -> Hypergraph:
    """m independent uniform n-subsets of {0..v-1}; duplicates collapse.

    Each draw is a partial Fisher-Yates shuffle of the vertex pool, so every
    n-subset is equally likely, and the whole hypergraph is a deterministic
    function of the seed.
    """
    if n < 2:
        raise ValueError("edge size must be at least 2")
    if v < n:
        raise ValueError("fewer vertices than the edge size")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    rng = random.Random(seed)
    pool = list(range(v))
    edges = []
    for _ in range(m):
        for i in range(n):
            j = rng.randrange(i, v)
            pool[i], pool[j] = pool[j], pool[i]
        edges.append(pool[:n])
    return make_hypergraph(v, edges)


@dataclass(frozen=True)
class AlterationParams:
    """Derived parameters of one pipeline run."""

    n: int
    v: int
    m_prime: int
    big_edge_size: int
    survivor_threshold: int
    seed: int
    max_retries: int
    strict: bool

    def __post_init__(self) -> None:
        if self.big_edge_size < 2:
            raise ValueError("blocking edges need at least 2 vertices")
        if self.v != 2 * self.big_edge_size:
            raise ValueError("vertex count must be twice the blocking edge size")

    @classmethod
    def for_edge_size(
        cls, n: int, seed: int, max_retries: int = 50, strict: bool = False
    ) -> "AlterationParams":
        """Parameters for smallest edge size n.

        The blocking edge size is ceil(n*n/4) with a floor of 2 (the floor
        only binds at n = 2, where a 1-vertex edge would be degenerate), and
        v is twice that, so half the vertices always carry one colour and a
        blocking edge can be carved from the majority class.
        """
        if n < 2:
            raise ValueError("edge size must be at least 2")
        if max_retries < 0:
            raise ValueError("max_retries must be nonnegative")
        big = max(2, (n * n + 3) // 4)
        return cls(
            n=n,
            v=2 * big,
            m_prime=halved_edge_count(n),
            big_edge_size=big,
            survivor_threshold=1 << big,
            seed=seed,
            max_retries=max_retries,
            strict=strict,
        )


@dataclass(frozen=True)
class AlterationReport:
    """Full trace of one pipeline run.

    killing_edges[i] is the blocking edge carved for survivors[i]; the edges
    collapse into h2, and the returned hypergraph is union(h1, h2).
    """

    params: AlterationParams
    retries_used: int
    survivor_count: int
    q_h1: DyadicValue
    q_h2: DyadicValue
    q_total: DyadicValue
    verified_uncolourable: bool
    h1: Hypergraph
    h2: Hypergraph
    survivors: tuple[Colouring, ...]
    killing_edges: tuple[frozenset[int], ...]


def run_alteration(
    n: int, seed: int, max_retries: int = 50, strict: bool = False
) -> tuple[Hypergraph, AlterationReport]:
    """Build a non-2-colourable hypergraph with smallest edge size n.

    Samples m' uniform n-edges, enumerates surviving proper colourings, and
    adds the lowest-indexed half of each survivor's majority colour class
    (red on ties) as a blocking edge.  In strict mode the sample is redrawn
    (derived seeds) until at most 2**(v/2) colourings survive.
    """
    params = AlterationParams.for_edge_size(n, seed, max_retries, strict)
    limit = enumeration_limit()
    if params.v > limit:
        raise ValueError(
            f"edge size {n} needs {params.v} vertices, above the enumeration limit ({limit})"
        )

    retries_used = 0
    h1 = None
    survivors: tuple[Colouring, ...] = ()
    for attempt in range(params.max_retries + 1):
        candidate = sample_uniform_edges(params.v, n, params.m_prime, derive_seed(seed, attempt))
        report = enumerate_proper(candidate, materialize=True)
        assert report.colourings is not None
        if not strict or report.total_proper <= params.survivor_threshold:
            retries_used = attempt
            h1 = candidate
            survivors = report.colourings
            break
    if h1 is None:
        raise RetriesExhaustedError(
            f"survivor count stayed above {params.survivor_threshold} "
            f"after {params.max_retries} retries (n={n}, seed={seed})"
        )

    v = params.v
    full = (1 << v) - 1
    killing_masks = []
    for c in survivors:
        majority = c.red_mask if 2 * c.red_count >= v else full ^ c.red_mask
        mask = 0
        for _ in range(params.big_edge_size):
            low = majority & -majority
            mask |= low
            majority ^= low
        killing_masks.append(mask)

    h2 = Hypergraph(v, tuple(killing_masks))
    h = union(h1, h2)
    verified = enumerate_proper(h).total_proper == 0
    report = AlterationReport(
        params=params,
        retries_used=retries_used,
        survivor_count=len(survivors),
        q_h1=q_value(h1),
        q_h2=q_value(h2),
        q_total=q_value(h),
        verified_uncolourable=verified,
        h1=h1,
        h2=h2,
        survivors=survivors,
        killing_edges=tuple(frozenset(mask_members(m)) for m in killing_masks),
    )
    return h, report
