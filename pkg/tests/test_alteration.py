"""Randomized pipeline plus the exact probability helpers feeding it."""

import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propb import (
    AlterationParams,
    RetriesExhaustedError,
    asymptotic_q,
    balanced_probability,
    derive_seed,
    enumerate_proper,
    erdos_edge_count,
    expected_proper_upper_bound,
    halved_edge_count,
    mono_probability,
    q_value,
    run_alteration,
    sample_uniform_edges,
    serialize,
    union,
)


def test_mono_probability_values():
    assert mono_probability(2, 2, 2) == Fraction(1, 3)
    assert mono_probability(3, 1, 2) == Fraction(1, 2)
    assert mono_probability(4, 0, 2) == Fraction(1)
    assert mono_probability(4, 4, 4) == Fraction(1, 35)


def test_balanced_probability_values():
    assert balanced_probability(4, 2) == Fraction(1, 3)
    assert balanced_probability(8, 4) == Fraction(1, 35)
    # n beyond the class size: only the impossible single-class events remain
    assert balanced_probability(4, 3) == Fraction(0)


def test_probability_validation():
    with pytest.raises(ValueError):
        mono_probability(2, 2, 0)
    with pytest.raises(ValueError):
        mono_probability(-1, 3, 2)
    with pytest.raises(ValueError):
        mono_probability(1, 1, 3)
    with pytest.raises(ValueError):
        balanced_probability(5, 2)
    with pytest.raises(ValueError):
        balanced_probability(4, 5)


def test_balanced_split_minimizes_mono_probability():
    # exhaustive on small even v: any split is at least as monochromatic
    for v in (4, 6, 8, 10, 12):
        for n in range(1, v + 1):
            q = balanced_probability(v, n)
            assert mono_probability(v // 2, v // 2, n) == q
            for v1 in range(v + 1):
                assert mono_probability(v1, v - v1, n) >= q


def test_asymptotic_q_tracks_exact_probability():
    big = (10 * 10 + 3) // 4
    ratio = float(balanced_probability(2 * big, 10)) / asymptotic_q(10)
    assert 0.8 < ratio < 1.2
    assert asymptotic_q(11) == asymptotic_q(10) / 2
    with pytest.raises(ValueError):
        asymptotic_q(1)


def test_edge_counts():
    table = {2: (8, 4), 3: (34, 17), 4: (121, 61), 5: (377, 189), 6: (1086, 543), 7: (2955, 1478)}
    for n, (m, m_prime) in table.items():
        assert erdos_edge_count(n) == m
        assert halved_edge_count(n) == m_prime
    for n in range(2, 13):
        assert 2 * halved_edge_count(n) - erdos_edge_count(n) in (0, 1)
    with pytest.raises(ValueError):
        erdos_edge_count(1)


def test_expected_proper_upper_bound_against_exact_rational():
    oracle = float(Fraction(2**8) * Fraction(34, 35) ** 61)
    bounds = expected_proper_upper_bound(8, 4, 61)
    assert math.isclose(bounds.tight, oracle, rel_tol=1e-12)
    assert bounds.tight < bounds.crude
    assert bounds.log_tight < bounds.log_crude


def test_expected_proper_upper_bound_edge_cases():
    zero = expected_proper_upper_bound(8, 4, 0)
    assert zero.tight == 256.0
    assert math.isclose(zero.crude, 256.0, rel_tol=1e-12)
    # size-1 edges are always monochromatic, so q = 1 and the bound collapses
    sure = expected_proper_upper_bound(2, 1, 5)
    assert sure.tight == 0.0
    assert sure.log_tight == -math.inf
    with pytest.raises(ValueError):
        expected_proper_upper_bound(8, 4, -1)


@given(
    v=st.integers(min_value=2, max_value=40).map(lambda k: 2 * k),
    n=st.integers(min_value=2, max_value=14),
    m=st.integers(min_value=1, max_value=10**6),
)
@settings(max_examples=100)
def test_tight_bound_never_exceeds_crude(v, n, m):
    if n > v // 2:
        n = v // 2
    bounds = expected_proper_upper_bound(v, n, m)
    assert bounds.log_tight < bounds.log_crude
    assert bounds.tight <= bounds.crude


def test_sampling_is_deterministic_and_well_formed():
    a = sample_uniform_edges(30, 5, 50, seed=7)
    b = sample_uniform_edges(30, 5, 50, seed=7)
    assert a == b
    assert a != sample_uniform_edges(30, 5, 50, seed=8)
    assert a.v == 30
    assert a.edge_count <= 50
    assert all(len(e) == 5 for e in a.edges)


def test_sampling_validation():
    with pytest.raises(ValueError):
        sample_uniform_edges(4, 1, 3, seed=0)
    with pytest.raises(ValueError):
        sample_uniform_edges(3, 4, 3, seed=0)
    with pytest.raises(ValueError):
        sample_uniform_edges(4, 2, -1, seed=0)


def test_sampling_covers_every_subset():
    # 10000 draws of 4-subsets of 8 points reach all 70 possibilities
    assert sample_uniform_edges(8, 4, 10000, seed=0).edge_count == 70


def test_sampling_is_roughly_uniform_across_seeds():
    counts = Counter(sample_uniform_edges(8, 4, 1, seed=s).edges[0] for s in range(2000))
    assert len(counts) == 70
    assert min(counts.values()) >= 10
    assert max(counts.values()) <= 60


def test_derive_seed():
    assert derive_seed(99, 0) == 99
    seen = {derive_seed(99, r) for r in range(100)}
    assert len(seen) == 100
    assert all(0 <= s < 1 << 64 for s in seen)


def test_params_for_edge_size():
    p4 = AlterationParams.for_edge_size(4, seed=0)
    assert (p4.v, p4.m_prime, p4.big_edge_size, p4.survivor_threshold) == (8, 61, 4, 16)
    p2 = AlterationParams.for_edge_size(2, seed=0)
    assert (p2.v, p2.big_edge_size, p2.survivor_threshold, p2.m_prime) == (4, 2, 4, 4)
    p3 = AlterationParams.for_edge_size(3, seed=0)
    assert (p3.v, p3.big_edge_size, p3.survivor_threshold, p3.m_prime) == (6, 3, 8, 17)
    p7 = AlterationParams.for_edge_size(7, seed=0)
    assert (p7.v, p7.big_edge_size, p7.survivor_threshold) == (26, 13, 8192)


def test_params_validation():
    with pytest.raises(ValueError):
        AlterationParams.for_edge_size(1, seed=0)
    with pytest.raises(ValueError):
        AlterationParams.for_edge_size(4, seed=0, max_retries=-1)
    with pytest.raises(ValueError):
        AlterationParams(
            n=4, v=9, m_prime=61, big_edge_size=4, survivor_threshold=16,
            seed=0, max_retries=50, strict=False,
        )


def test_run_builds_uncolourable_hypergraphs():
    for n in (2, 3, 4):
        for seed in range(3):
            h, report = run_alteration(n, seed)
            assert report.verified_uncolourable
            assert enumerate_proper(h).total_proper == 0
            assert h == union(report.h1, report.h2)


def test_killing_edges_sit_inside_majority_classes():
    _, report = run_alteration(4, 13)
    assert report.survivor_count == 20
    assert report.retries_used == 0
    big = report.params.big_edge_size
    for colouring, kill in zip(report.survivors, report.killing_edges):
        majority = colouring.red if 2 * colouring.red_count >= report.params.v else colouring.blue
        assert len(kill) == big
        assert kill == frozenset(sorted(majority)[:big])


def test_weight_accounting():
    h, report = run_alteration(4, 13)
    assert report.q_h1 + report.q_h2 == report.q_total
    assert report.q_total == q_value(h)
    assert report.q_h1.as_fraction() <= Fraction(61, 16)
    assert report.q_h2.as_fraction() <= Fraction(report.survivor_count, 16)


def test_strict_mode_retries_until_threshold():
    h, report = run_alteration(4, 13, strict=True)
    assert report.retries_used == 2
    assert report.survivor_count == 12
    assert report.survivor_count <= report.params.survivor_threshold
    assert report.verified_uncolourable
    assert enumerate_proper(h).total_proper == 0


def test_strict_mode_exhaustion():
    for max_retries in (0, 1):
        with pytest.raises(RetriesExhaustedError):
            run_alteration(4, 13, max_retries=max_retries, strict=True)


def test_run_refuses_unenumerable_sizes():
    with pytest.raises(ValueError, match="enumeration limit"):
        run_alteration(8, 0)


def test_run_is_deterministic():
    h_a, rep_a = run_alteration(3, 5, strict=True)
    h_b, rep_b = run_alteration(3, 5, strict=True)
    assert h_a == h_b
    assert rep_a == rep_b
    assert serialize(h_a) == serialize(h_b)
