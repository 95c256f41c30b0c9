"""
Tests for Coxeter graphs, Artin presentations and fundamental elements.
"""

import pytest

from markedmcg.artin import (
    INFINITE_LABEL,
    CoxeterGraph,
    SubgraphType,
    artin_presentation,
    classify_induced,
    coxeter_graph_g0n,
    coxeter_graph_g1n,
    coxeter_number,
    fundamental_word,
    fundamental_word_for,
    longest_element_word,
    prod_word,
)
from markedmcg.words import IDENTITY, Word


def chain(names, labels=None):
    graph = CoxeterGraph(names)
    for i, (a, b) in enumerate(zip(names, names[1:])):
        graph.set_label(a, b, (labels or {}).get(i, 3))
    return graph


def star(centre, arms):
    """Centre joined to the first vertex of each arm; arms are chains."""
    names = [centre] + [v for arm in arms for v in arm]
    graph = CoxeterGraph(names)
    for arm in arms:
        graph.set_label(centre, arm[0], 3)
        for a, b in zip(arm, arm[1:]):
            graph.set_label(a, b, 3)
    return graph


def test_coxeter_graph_labels():
    graph = CoxeterGraph(["a", "b", "c"], {("a", "b"): 3, ("b", "c"): INFINITE_LABEL})
    assert graph.m("a", "b") == 3
    assert graph.m("a", "c") == 2
    assert graph.m("a", "a") == 1
    assert graph.matrix().tolist() == [[1, 3, 2], [3, 1, 0], [2, 0, 1]]
    with pytest.raises(ValueError):
        graph.set_label("a", "b", 1)
    with pytest.raises(ValueError):
        graph.set_label("a", "z", 3)
    with pytest.raises(ValueError):
        CoxeterGraph(["a", "a"])


def test_prod_word():
    assert prod_word("a", "b", 3) == Word([("a", 1), ("b", 1), ("a", 1)])
    assert len(prod_word("a", "b", 4)) == 4
    with pytest.raises(ValueError):
        prod_word("a", "b", 1)


def test_artin_presentation_relators():
    graph = CoxeterGraph(["a", "b", "c"], {("a", "b"): 3, ("b", "c"): INFINITE_LABEL})
    p = artin_presentation(graph)
    # a-b braid relation, a-c commutation; b-c has no relation
    assert len(p.relators) == 2
    assert p.generators == ["a", "b", "c"]


def test_named_graphs():
    graph = coxeter_graph_g1n(1, 2)
    assert graph.vertices == ["x0", "x1", "x2", "y1"]
    assert graph.m("x0", "y1") == 3
    assert graph.m("x0", "x1") == 2
    bigger = coxeter_graph_g1n(2, 1)
    assert "z" in bigger.vertices
    assert bigger.m("z", "y3") == 3
    g0n = coxeter_graph_g0n(1, 3)
    assert g0n.m("x1", "v1") == 4
    assert g0n.m("v1", "v2") == 3
    with pytest.raises(ValueError):
        coxeter_graph_g1n(0, 2)


def test_induced_subgraph():
    graph = coxeter_graph_g1n(1, 2)
    sub = graph.induced_subgraph(["x1", "y1"])
    assert sub.vertices == ["x1", "y1"]
    assert sub.m("x1", "y1") == 3
    with pytest.raises(ValueError):
        graph.induced_subgraph(["q"])


def test_classify_chains():
    assert classify_induced(chain(["a", "b", "c"]), ["a", "b", "c"]) == SubgraphType(
        "A", 3, ("a", "b", "c")
    )
    b_type = classify_induced(chain(["a", "b", "c"], {1: 4}), ["a", "b", "c"])
    assert b_type.kind == "B"
    assert b_type.order == ("c", "b", "a")
    assert classify_induced(chain(["a", "b"]), ["a"]) == SubgraphType("A", 1, ("a",))
    assert str(classify_induced(chain(["a", "b"]), ["a", "b"])) == "A(2)"


def test_classify_branched():
    d4 = classify_induced(star("c", [["a"], ["b"], ["d"]]), ["a", "b", "c", "d"])
    assert d4.kind == "D"
    assert d4.k == 4
    e6 = star("c", [["a1", "a2"], ["b1", "b2"], ["d"]])
    assert classify_induced(e6, e6.vertices).kind == "E6"
    e7 = star("c", [["a1", "a2", "a3"], ["b1", "b2"], ["d"]])
    assert str(classify_induced(e7, e7.vertices)) == "E7"


def test_classify_unsupported():
    cycle = chain(["a", "b", "c"])
    cycle.set_label("a", "c", 3)
    assert not classify_induced(cycle, ["a", "b", "c"]).supported
    assert not classify_induced(chain(["a", "b"], {0: 5}), ["a", "b"]).supported
    disconnected = CoxeterGraph(["a", "b"])
    assert not classify_induced(disconnected, ["a", "b"]).supported
    with pytest.raises(ValueError):
        classify_induced(disconnected, [])


@pytest.mark.parametrize(
    "kind, k, h", [("A", 4, 5), ("B", 3, 6), ("D", 5, 8), ("E6", 6, 12), ("E7", 7, 18)]
)
def test_coxeter_number(kind, k, h):
    assert coxeter_number(SubgraphType.standard(kind, k)) == h


@pytest.mark.parametrize(
    "kind, k, length",
    [("A", 3, 6), ("A", 1, 1), ("B", 3, 9), ("D", 4, 12), ("D", 5, 20), ("E6", 6, 36), ("E7", 7, 63)],
)
def test_fundamental_word_lengths(kind, k, length):
    # Δ is a positive word whose length is the number of positive roots
    word = fundamental_word(SubgraphType.standard(kind, k), 1)
    assert len(word) == length
    assert all(sign == 1 for _, sign in word)


def test_fundamental_word_e7_is_ninth_power():
    t = SubgraphType.standard("E7", 7)
    coxeter_element = Word([(v, 1) for v in t.order])
    assert fundamental_word(t, 1) == coxeter_element**9


def test_fundamental_word_powers():
    t = SubgraphType.standard("A", 2)
    assert fundamental_word(t, 2) == Word.gen("x1") * Word.gen("x2") * Word.gen(
        "x1"
    ) * Word.gen("x2") * Word.gen("x1") * Word.gen("x2")
    assert fundamental_word(t, -2) == fundamental_word(t, 2).inverse()
    assert len(fundamental_word(t, 4)) == 12
    with pytest.raises(ValueError):
        fundamental_word(t, 3)
    with pytest.raises(ValueError):
        fundamental_word(SubgraphType("Unsupported", 2, ("a", "b")), 1)


def test_longest_element_word_a3():
    graph = chain(["x1", "x2", "x3"])
    assert len(longest_element_word(graph, ["x1", "x2", "x3"])) == 6


def test_fundamental_word_for_uses_vertex_names():
    graph = coxeter_graph_g1n(1, 1)
    word = fundamental_word_for(graph, ["x0", "y1"], 1)
    assert sorted(word.symbols()) == ["x0", "y1"]
    assert len(word) == 3
    assert fundamental_word_for(graph, [], 2) == IDENTITY
    with pytest.raises(ValueError):
        fundamental_word_for(graph, ["x0", "x1"], 1)
