"""
Tests for tagged triangulations, flips and the flip/mutation correspondence.
"""

import numpy as np
import pytest

from markedmcg.cluster import arrow_count, mutate_matrix
from markedmcg.triangulation import (
    NOTCHED,
    PLAIN,
    SelfFolded,
    TaggedTriangulation,
    annulus,
    explore,
    once_punctured_4gon,
    once_punctured_digon,
    once_punctured_torus,
    polygon_fan,
    twice_punctured_digon,
)


def flips_match_mutation(t):
    B = t.adjacency_matrix()
    return all(
        np.array_equal(t.flip(label).adjacency_matrix(), mutate_matrix(B, k))
        for k, label in enumerate(t.labels, start=1)
    )


STOCK = [
    lambda: polygon_fan(4),
    lambda: polygon_fan(6),
    once_punctured_torus,
    lambda: annulus(1, 2),
    lambda: annulus(2, 2),
    lambda: annulus(2, 3),
    once_punctured_digon,
    once_punctured_4gon,
    twice_punctured_digon,
]


@pytest.mark.parametrize("build", STOCK)
def test_stock_triangulations_are_valid(build):
    t = build()
    t.validate()
    B = t.adjacency_matrix()
    assert np.array_equal(B.T, -B)


@pytest.mark.parametrize("build", STOCK)
def test_flip_is_mutation(build):
    assert flips_match_mutation(build())


@pytest.mark.parametrize("build", STOCK)
def test_flip_twice_returns(build):
    t = build()
    for label in t.labels:
        assert t.flip(label).flip(label).key() == t.key()


def test_flip_is_mutation_after_flips(torus):
    for path in (["a"], ["a", "b"], ["c", "a", "b"]):
        assert flips_match_mutation(torus.flip_path(path))


def test_polygon_fan(pentagon):
    assert pentagon.labels == ("d2", "d3")
    assert pentagon.tagged_arc("d2").ends == (("V0", PLAIN), ("V2", PLAIN))
    assert pentagon.punctures == frozenset()
    assert arrow_count(pentagon.adjacency_matrix()) == 1


def test_torus_is_markov_quiver(torus):
    B = torus.adjacency_matrix()
    assert arrow_count(B) == 6
    assert set(np.abs(B[~np.eye(3, dtype=bool)]).tolist()) == {2}


def test_punctured_digon_self_folded():
    t = once_punctured_digon()
    assert t.self_folded() == [SelfFolded("r", "l", "P")]
    assert t.tagged_arc("r").ends == (("P", PLAIN), ("V0", PLAIN))
    assert t.tagged_arc("l").ends == (("P", NOTCHED), ("V0", PLAIN))
    assert t.adjacency_matrix().tolist() == [[0, 0], [0, 0]]


def test_flip_radius_toggles_tag():
    t = once_punctured_digon()
    flipped = t.flip("r")
    assert "P" in flipped.notched
    arcs = {arc.label: arc.ends for arc in flipped.tagged_arcs()}
    # the loop keeps its tagged arc, the radius becomes notched at P
    assert arcs["l"] == t.tagged_arc("l").ends


def test_flip_errors(pentagon):
    with pytest.raises(ValueError):
        pentagon.flip("~0")
    with pytest.raises(KeyError):
        pentagon.flip("zz")


def test_create_rejects_bad_gluing():
    with pytest.raises(ValueError):
        TaggedTriangulation.create(["a"], [(("a", "P"), ("~0", "Q"), ("~1", "R"))], ())
    with pytest.raises(ValueError):
        TaggedTriangulation.create(
            ["a"],
            [(("a", "P"), ("~0", "Q"), ("~1", "R")), (("a", "P"), ("~2", "Q"), ("~3", "R"))],
            (),
        )


def test_from_label_triangles_recovers_torus():
    t = TaggedTriangulation.from_label_triangles(
        ["a", "b", "c"], [["a", "b", "c"], ["a", "b", "c"]]
    )
    assert len(t.punctures) == 1
    assert np.array_equal(t.adjacency_matrix(), once_punctured_torus().adjacency_matrix())


def test_from_label_triangles_recovers_square():
    t = TaggedTriangulation.from_label_triangles(
        ["d"], [["~0", "~1", "d"], ["d", "~2", "~3"]]
    )
    assert t.punctures == frozenset()
    assert len(t.vertices) == 4
    assert t.adjacency_matrix().tolist() == [[0]]


def test_from_label_triangles_counts_sides():
    with pytest.raises(ValueError, match="appears"):
        TaggedTriangulation.from_label_triangles(["a"], [["a", "~0", "~1"]])


def test_relabel():
    t = polygon_fan(5).relabel({"d2": "x"})
    assert t.labels == ("x", "d3")
    with pytest.raises(ValueError):
        polygon_fan(5).relabel({"d2": "d3"})


def test_explore_pentagon_finds_five_triangulations(pentagon):
    found = explore(pentagon, depth=3)
    assert len({t.unlabelled_key() for t in found}) == 5


def test_explore_hexagon_threads_agree():
    hexagon = polygon_fan(6)
    serial = explore(hexagon, depth=4)
    threaded = explore(hexagon, depth=4, workers=4)
    assert {t.key() for t in serial} == {t.key() for t in threaded}
    assert len({t.unlabelled_key() for t in serial}) == 14


def test_explore_depth_zero(pentagon):
    assert explore(pentagon, depth=0) == [pentagon]
    with pytest.raises(ValueError):
        explore(pentagon, depth=-1)


def test_annulus_zigzag_shapes():
    assert annulus(2, 3).labels == ("e0", "e1", "e2", "e3", "e4")
    assert "alternating" in annulus(2, 2).name
    assert "outer-first" in annulus(2, 2, alternating=False).name
    with pytest.raises(ValueError):
        annulus(1, 2, alternating=True)
