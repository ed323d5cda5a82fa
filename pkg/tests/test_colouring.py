"""Colouring engines: the exhaustive scanner against a per-colouring oracle,
and the backtracking decision procedure against the scanner."""

import random

import pytest

from propb import (
    Colouring,
    affine_plane_gf4,
    enumerate_proper,
    fano,
    is_proper,
    is_two_colourable,
    make_hypergraph,
    monochromatic_edges,
    paper_example,
    pair_opposites,
    seymour_toft,
    triangle,
)


def census_oracle(h):
    """Trivially correct census: test every red mask with is_proper."""
    total = balanced = 0
    reds = []
    for r in range(1 << h.v):
        c = Colouring(h.v, r)
        if is_proper(h, c):
            total += 1
            reds.append(r)
            if 2 * r.bit_count() == h.v:
                balanced += 1
    return total, balanced, reds


def random_hypergraph(rng, max_v=10, max_edges=8, max_size=None):
    v = rng.randint(2, max_v)
    top = max_size or v
    edges = [
        rng.sample(range(v), rng.randint(2, min(top, v))) for _ in range(rng.randint(0, max_edges))
    ]
    return make_hypergraph(v, edges)


def test_is_proper_basics():
    single = make_hypergraph(3, [{0, 1}])
    assert is_proper(single, Colouring.from_red(3, {0}))
    assert not is_proper(single, Colouring.from_red(3, {0, 1}))
    assert not is_proper(single, Colouring.from_red(3, {2}))  # {0,1} all blue


def test_monochromatic_edges_on_fano_line():
    c = Colouring.from_red(7, {0, 1, 2})
    assert monochromatic_edges(fano(), c) == [frozenset({0, 1, 2})]
    assert not is_proper(fano(), c)


def test_vertex_count_mismatch_rejected():
    with pytest.raises(ValueError):
        is_proper(triangle(), Colouring.from_red(4, {0}))
    with pytest.raises(ValueError):
        monochromatic_edges(fano(), Colouring.from_red(3, {0}))


def test_enumerate_fixed_points():
    assert enumerate_proper(make_hypergraph(0, [])).total_proper == 1
    assert enumerate_proper(make_hypergraph(3, [])).total_proper == 8
    assert enumerate_proper(triangle()).total_proper == 0
    plane = enumerate_proper(affine_plane_gf4())
    assert plane.total_proper == 120
    assert plane.balanced_count == 120


def test_enumerate_matches_per_colouring_oracle():
    rng = random.Random(2024)
    for _ in range(40):
        h = random_hypergraph(rng)
        total, balanced, reds = census_oracle(h)
        report = enumerate_proper(h, materialize=True)
        assert report.total_proper == total
        assert report.balanced_count == balanced
        assert [c.red_mask for c in report.colourings] == sorted(reds)


def test_enumerate_count_is_even_with_any_edge():
    rng = random.Random(5)
    for _ in range(30):
        h = random_hypergraph(rng)
        if h.edge_count == 0:
            continue
        assert enumerate_proper(h).total_proper % 2 == 0


def test_complement_symmetry():
    rng = random.Random(11)
    for _ in range(30):
        h = random_hypergraph(rng)
        c = Colouring(h.v, rng.randrange(1 << h.v))
        assert is_proper(h, c) == is_proper(h, c.complement())


def test_adding_an_edge_never_gains_colourings():
    rng = random.Random(13)
    for _ in range(30):
        h = random_hypergraph(rng)
        before = enumerate_proper(h).total_proper
        extra = rng.sample(range(h.v), rng.randint(2, h.v))
        grown = make_hypergraph(h.v, list(h.edges) + [extra])
        assert enumerate_proper(grown).total_proper <= before


def test_materialized_list_closed_under_complement():
    report = enumerate_proper(affine_plane_gf4(), materialize=True)
    masks = {c.red_mask for c in report.colourings}
    full = (1 << 16) - 1
    assert len(masks) == 120
    assert all(full ^ m in masks for m in masks)
    assert [c.red_mask for c in report.colourings] == sorted(masks)


def test_enumeration_limit_refusal(monkeypatch):
    big = make_hypergraph(29, [{0, 1}])
    with pytest.raises(ValueError, match="is_two_colourable"):
        enumerate_proper(big)
    monkeypatch.setenv("PROPB_ENUM_LIMIT", "6")
    with pytest.raises(ValueError):
        enumerate_proper(fano())
    monkeypatch.setenv("PROPB_ENUM_LIMIT", "7")
    assert enumerate_proper(fano()).total_proper == 0


def test_worker_count_does_not_change_results():
    rng = random.Random(99)
    h = make_hypergraph(19, [rng.sample(range(19), rng.randint(2, 6)) for _ in range(12)])
    reports = [enumerate_proper(h, workers=w) for w in (1, 2, 4)]
    assert reports[0] == reports[1] == reports[2]

    path = make_hypergraph(18, [{i, i + 1} for i in range(17)])
    mats = [enumerate_proper(path, materialize=True, workers=w) for w in (1, 2, 4)]
    assert mats[0] == mats[1] == mats[2]
    assert mats[0].total_proper == 2  # connected bipartite: one split, two orientations


def test_decision_agrees_with_enumeration():
    rng = random.Random(77)
    for _ in range(60):
        h = random_hypergraph(rng, max_v=12)
        colourable, witness = is_two_colourable(h)
        assert colourable == (enumerate_proper(h).total_proper > 0)
        if colourable:
            assert is_proper(h, witness)
        else:
            assert witness is None


def test_decision_on_named_uncolourables():
    for h in (triangle(), fano(), seymour_toft(), paper_example()):
        assert is_two_colourable(h) == (False, None)


def test_decision_witness_is_stable():
    h = make_hypergraph(6, [{0, 1}, {1, 2, 3}, {3, 4, 5}, {0, 5}])
    first = is_two_colourable(h)
    second = is_two_colourable(h)
    assert first == second
    assert is_proper(h, first[1])


def test_pair_opposites_small_example():
    pair = pair_opposites([Colouring.from_red(2, {0}), Colouring.from_red(2, {1})])
    assert pair == [(Colouring.from_red(2, {0}), Colouring.from_red(2, {1}))]
    assert pair_opposites([]) == []


def test_pair_opposites_rejects_bad_input():
    with pytest.raises(ValueError):
        pair_opposites([Colouring.from_red(2, {0})])  # not closed
    with pytest.raises(ValueError):
        pair_opposites([Colouring.from_red(2, {0})] * 2)  # duplicate
    with pytest.raises(ValueError):
        pair_opposites([Colouring.from_red(2, {0}), Colouring.from_red(3, {1, 2})])


def test_pair_opposites_on_plane_census():
    report = enumerate_proper(affine_plane_gf4(), materialize=True)
    pairs = pair_opposites(list(report.colourings))
    assert len(pairs) == 60
    for first, second in pairs:
        assert 0 in first.red
        assert 0 not in second.red
        assert first.complement() == second
    reps = [first.red_mask for first, _ in pairs]
    assert reps == sorted(reps)
