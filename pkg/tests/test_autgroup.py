"""
Tests for tagged mapping class arithmetic, the exceptional groups and descriptors.
"""

import pytest
from sympy.combinatorics import Permutation

from markedmcg.autgroup import (
    CONVENTION_LITERAL,
    Di4xSigma3,
    FourPunctSphereGroup,
    TaggedMCG,
    TaggedMCGElement,
    ZxS4Element,
    ZxS4semiZ2,
    aut_group_descriptor,
    exceptional_group,
    find_axiom_violation,
    literal_counterexample,
    random_triples,
)
from markedmcg.surface import SurfaceKind
from markedmcg.words import IDENTITY, Word


@pytest.fixture
def sphere4_group(stock_surfaces):
    return TaggedMCG.for_surface(stock_surfaces["sphere4"])


def element(h="", eps=0, R=()):
    letters = [(t.rstrip("'"), -1 if t.endswith("'") else 1) for t in h.split()]
    return TaggedMCGElement.create(Word(letters), eps, R)


def test_element_creation():
    x = element("s1 s2'", 1, [2, 2])
    assert x.R == frozenset({2})
    assert x.to_dict() == {"h": ["s1", "s2'"], "eps": 1, "R": [2]}
    assert TaggedMCGElement.from_dict(x.to_dict()) == x
    with pytest.raises(ValueError):
        TaggedMCGElement.create(IDENTITY, 2)
    with pytest.raises(ValueError):
        TaggedMCGElement.from_dict({"h": [], "eps": 0})


def test_multiply_follows_the_group_law(sphere4_group):
    a = element("s1", 1, [1])
    b = element("s2 s1", 0, [3])
    product = sphere4_group.multiply(a, b)
    # eps = 1 twists the word of b; θ(s2 s1)⁻¹ carries puncture 1 to 2
    assert product.h == Word([("s1", 1), ("s2", -1), ("s1", -1)])
    assert product.eps == 1
    assert product.R == frozenset({2, 3})


def test_theta_of_words(sphere4_group):
    g = sphere4_group
    s1, s2 = Word.gen("s1"), Word.gen("s2")
    assert g.theta(s1) == g.permutations.transposition(1, 2)
    assert g.theta(s1 * s2) == g.permutations.multiply(g.theta(s1), g.theta(s2))
    assert g.theta(s1.twist()) == g.theta(s1)


def test_axioms_hold_on_samples(sphere4_group, rng):
    assert find_axiom_violation(sphere4_group, random_triples(sphere4_group, rng, 25)) is None


def test_inverse_and_power(sphere4_group):
    x = element("s1 s2 s3'", 1, [1, 4])
    e = sphere4_group.identity()
    assert sphere4_group.multiply(x, sphere4_group.inverse(x)) == e
    assert sphere4_group.multiply(sphere4_group.inverse(x), x) == e
    assert sphere4_group.power(x, 0) == e
    assert sphere4_group.power(x, 2) == sphere4_group.multiply(x, x)
    assert sphere4_group.power(x, -1) == sphere4_group.inverse(x)


def test_membership_errors(sphere4_group):
    e = sphere4_group.identity()
    with pytest.raises(ValueError):
        sphere4_group.multiply(element("x9"), e)
    with pytest.raises(ValueError):
        sphere4_group.multiply(e, element("", 0, [5]))
    with pytest.raises(ValueError):
        TaggedMCG(sphere4_group.presentation, 4, convention="printed")


def test_literal_convention_is_not_associative():
    group, (a, b, c) = literal_counterexample()
    left = group.multiply(group.multiply(a, b), c)
    right = group.multiply(a, group.multiply(b, c))
    assert left.R == frozenset({3})
    assert right.R == frozenset({2})
    violation = find_axiom_violation(group, [(a, b, c)])
    assert violation is not None
    assert violation.axiom == "associativity"
    assert group.convention == CONVENTION_LITERAL


def test_inverse_convention_is_associative_on_the_same_triple(stock_surfaces):
    _, triple = literal_counterexample()
    group = TaggedMCG.for_surface(stock_surfaces["sphere4"])
    a, b, c = triple
    assert group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c))
    assert group.multiply(group.multiply(a, b), c).R == frozenset({3})


# ============================================================================
# 4-punctured sphere and exceptional groups
# ============================================================================


def test_fourpunct_bits(rng):
    group = FourPunctSphereGroup()
    e = group.identity()
    sigma, mu = group.sigma(), group.mu()
    assert group.multiply(sigma, sigma) == e
    assert group.multiply(mu, mu) == e
    for _ in range(10):
        x = group.random_element(rng)
        assert group.multiply(sigma, x) == group.multiply(x, sigma)
        assert group.multiply(mu, x) == group.multiply(x, mu)
    assert find_axiom_violation(group, random_triples(group, rng, 10)) is None
    assert group.multiply(sigma, mu).to_dict()["sigma"] == 1


def test_di4_x_sigma3():
    group = Di4xSigma3()
    assert group.order() == 48
    assert len(group.elements()) == 48
    assert len(set(map(tuple, (p.array_form for p in group.elements())))) == 48
    with pytest.raises(ValueError):
        group.multiply(Permutation(0, 1, size=7), group.identity())
    with pytest.raises(ValueError):
        group.inverse(Permutation(0, 1, size=4))


def test_di4_x_sigma3_axioms(rng):
    group = Di4xSigma3()
    assert find_axiom_violation(group, random_triples(group, rng, 20)) is None


def test_z_x_s4_semidirect():
    group = ZxS4semiZ2()
    a = ZxS4Element(2, Permutation(0, 1, 2, size=4), 1)
    assert group.multiply(a, group.inverse(a)) == group.identity()
    assert group.multiply(group.inverse(a), a) == group.identity()
    t = ZxS4Element(0, Permutation(3), 1)
    k = ZxS4Element(3, Permutation(3), 0)
    assert group.multiply(group.multiply(t, k), t).k == -3
    assert group.order() is None


def test_z_x_s4_semidirect_axioms(rng):
    group = ZxS4semiZ2()
    assert find_axiom_violation(group, random_triples(group, rng, 20)) is None


def test_exceptional_group_dispatch():
    assert isinstance(exceptional_group(SurfaceKind.ONCE_PUNCTURED_4GON), Di4xSigma3)
    assert isinstance(exceptional_group(SurfaceKind.TWICE_PUNCTURED_DIGON), ZxS4semiZ2)
    with pytest.raises(ValueError):
        exceptional_group(SurfaceKind.FEASIBLE_GENUS0)


# ============================================================================
# Descriptors
# ============================================================================


@pytest.mark.parametrize(
    "name, shape, exceptional",
    [
        ("sphere4", "(MCG⋊Z₂)⋉Z₂^𝒫₄×Z₂²", None),
        ("sphere5", "(MCG⋊Z₂)⋉Z₂^𝒫₅", None),
        ("torus1", "MCG ⋊ Z₂", None),
        ("torus2", "(MCG⋊Z₂)⋉Z₂^𝒫₂", None),
        ("punctured_4gon", "Di₄×Σ₃", "Di4xSigma3"),
        ("twice_punctured_digon", "Z×S₄⋊Z₂", "ZxS4semiZ2"),
        ("annulus22", "H_{2,2} ⋊ Z₂", None),
        ("annulus12", "H_{1,2}", None),
    ],
)
def test_descriptor_shapes(stock_surfaces, name, shape, exceptional):
    descriptor = aut_group_descriptor(stock_surfaces[name])
    assert descriptor.shape == shape
    assert descriptor.exceptional == exceptional
    assert descriptor.presentation is not None
    assert descriptor.format_row().endswith(f"| {shape}")
    assert descriptor.to_dict()["group"] == shape


def test_descriptor_rejects_excluded(stock_surfaces):
    with pytest.raises(ValueError):
        aut_group_descriptor(stock_surfaces["sphere3"])
