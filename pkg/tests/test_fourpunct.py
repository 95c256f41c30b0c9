"""
Tests for the 4-punctured sphere seeds, the mutation sequence and the a2/a4 swap.
"""

import numpy as np
import pytest

from markedmcg.cluster import Seed, arrow_count, mutation_path
from markedmcg.fourpunct import (
    BACKWARD_PATH,
    FORWARD_PATH,
    MAXIMAL_ARROWS,
    b_labelled_seed,
    is_maximal_quiver,
    is_maximal_triangulation,
    maximal_seed,
    maximal_triangulation,
    sigma_swap_check,
    three_self_folded_triangulation,
    transposition_scan,
    twelve_arrow_outliers,
    verify_mu6526,
)


def test_stock_triangulations():
    maximal = maximal_triangulation()
    folded = three_self_folded_triangulation()
    assert maximal.labels == folded.labels == ("a1", "a2", "a3", "a4", "a5", "a6")
    assert maximal.self_folded() == []
    assert sorted((f.radius, f.loop) for f in folded.self_folded()) == [
        ("a1", "a6"),
        ("a3", "a2"),
        ("a4", "a5"),
    ]


def test_both_quivers_have_twelve_arrows():
    assert arrow_count(maximal_seed().matrix) == MAXIMAL_ARROWS
    assert arrow_count(three_self_folded_triangulation().seed().matrix) == MAXIMAL_ARROWS
    assert np.abs(maximal_seed().matrix).max() == 1


def test_maximality_is_decided_on_triangulations():
    folded = three_self_folded_triangulation()
    assert is_maximal_quiver(folded.seed())
    assert not is_maximal_triangulation(folded)
    assert is_maximal_triangulation(maximal_triangulation())


def test_mutation_sequence_reaches_the_maximal_seed():
    report = verify_mu6526()
    assert report.passed
    assert report.forward_exact
    assert report.backward_returns
    assert report.forward_witness is not None
    folded = three_self_folded_triangulation().seed()
    assert mutation_path(mutation_path(folded, FORWARD_PATH), BACKWARD_PATH) == folded


def test_sigma_swap():
    report = sigma_swap_check()
    assert report.passed
    assert report.involution
    assert report.isomorphism
    # the swap permutes arcs without permuting the triangles
    assert not report.maps_triangles
    assert ("a2", "a4") in transposition_scan()


def test_b_labelled_seed():
    seed = b_labelled_seed()
    assert seed.labels == ("b1", "b2", "b3", "b4", "b5", "b6")
    assert arrow_count(seed.matrix) == MAXIMAL_ARROWS


def test_no_twelve_arrow_outliers_nearby():
    assert twelve_arrow_outliers(2) == []


def test_maximal_quiver_needs_rank_six():
    with pytest.raises(ValueError):
        is_maximal_quiver(Seed.create(["a1", "a2"], [[0, 1], [-1, 0]]))
    assert not is_maximal_quiver(Seed.create([f"a{i}" for i in range(1, 7)], np.zeros((6, 6))))
